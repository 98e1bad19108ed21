"""
Detecting B2-slant helices
==========================

``check_slant`` tests ``f' + k1 g = 0`` with ``g = k3/k2`` and
``f = eps1 g'/k1``. We compare three profiles:

* a generated slant profile, ``k3/k2 = cos(s)``;
* the same profile with ``k3`` perturbed by 5 %;
* the constant-ratio profile of the hyperbolic-circular curve, for which
  ``F = g^2 + eps1 (g'/k1)^2`` is constant although no fixed axis exists.

A brute-force search for a direction ``U`` with constant ``<B2, U>``
confirms the last verdict.
"""

import numpy as np

from slanthelix import (
    CurvatureProfile,
    SlantSpec,
    axis_search,
    check_slant,
    generate_slant_curve,
    hyperbolic_circular,
    sample_frames,
)
from slanthelix.functions import Func, Product

spec = SlantSpec(k1=1, k2=1, C=1, D=0, s_range=(0, 1.5))
bump = Func(lambda s: 1 + 0.05 * np.sin(s), (lambda s: 0.05 * np.cos(s), lambda s: -0.05 * np.sin(s)))
p = spec.profile
perturbed = CurvatureProfile(p.k1, p.k2, Product(p.k3, bump), domain=p.domain)
constant = CurvatureProfile(np.sqrt(3), 2 * np.sqrt(6) / 3, np.sqrt(3) / 3, domain=(0, 1.5))

print(f"{'profile':<16}{'slant':>7}{'F spread':>11}{'residual':>11}{'degenerate':>12}")
for name, prof in (("k3 = cos s", p), ("perturbed", perturbed), ("constant ratio", constant)):
    v = check_slant(prof)
    print(f"{name:<16}{v.is_slant!s:>7}{v.F_spread:>11.1e}{v.f_residual_max:>11.1e}"
          f"{v.degenerate_constant_ratio!s:>12}")

# %% axis search on frames
fc, _ = generate_slant_curve(spec)
print("\nslant helix:          relative residual", f"{axis_search(fc.B2).relative_residual:.1e}")
fc, _ = sample_frames(hyperbolic_circular(), np.linspace(-np.pi, np.pi, 200))
print("hyperbolic-circular:  relative residual", f"{axis_search(fc.B2).relative_residual:.2f}")
