"""
slanthelix: spacelike curves in Minkowski 4-space, their Frenet frames, and
detection/synthesis of B2-slant helices.
"""

from .curves import (
    Curve,
    SampledCurve,
    builtin_family,
    check_unit_speed,
    hyperbolic_circular,
    line,
    load_curve_csv,
    save_curve_csv,
)
from .errors import *  # noqa: F401,F403
from .frenet import (
    FramedCurve,
    FrenetFrame,
    canonical_frame,
    curvature_profile,
    frame_at,
    frame_curvatures,
    integrate_frenet,
    load_framed_csv,
    orthonormality_defect,
    sample_frames,
)
from .functions import Const, Func, Linear, parse_function_spec
from .generator import (
    SlantSpec,
    conserved_pair,
    generate_slant_curve,
    max_positive_phi,
    printed_pair,
    reconstruct_f,
    slant_profile,
)
from .minkowski import (
    CausalCharacter,
    causal_character,
    gram_schmidt_indefinite,
    inner,
    normalize,
    pseudo_norm,
    vec4,
)
from .profile import CurvatureProfile, SampledProfile, load_profile_csv, phi, validate_signature
from .slant import (
    axis_report,
    axis_search,
    axis_vector,
    characteristic_F,
    check_slant,
    classify_axis,
    constants_AB,
    ratio_g,
    ratio_g_prime,
    slant_f,
    slant_report,
    solve_a1,
)

__version__ = "0.1.0"
