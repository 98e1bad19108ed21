"""
Generating slant helices and classifying their axes
===================================================

Profiles with ``k3/k2 = C eta(phi) + D mu(phi)``, ``phi = int k1``, are
slant. The axis ``U = -f T + eps1 g N - B2`` is fixed along the curve and
``<U, U> = eps1 c + eps2`` where ``c`` is the constant value of ``F``.
For ``eps1 = -1`` (``c = m``) the axis is spacelike for ``m < 1``,
lightlike for ``m = 1`` and timelike for ``m > 1`` -- including negative
``m``.

The second part compares the first integrals of ``g' = eps1 f k1``,
``f' = -k1 g``: for ``eps1 = +1`` the pair must be
``(g cos(phi) - f sin(phi), g sin(phi) + f cos(phi))``; the combination
``g cos(phi) + f sin(phi)`` drifts.
"""

import numpy as np

from slanthelix import SlantSpec, conserved_pair, generate_slant_curve, printed_pair
from slanthelix.functions import Linear

cases = [
    ("eps1=+1 C=1 D=0", dict(C=1, D=0, s_range=(0, 1.2))),
    ("eps1=+1 eps2=-1", dict(C=1, D=0.5, eps2=-1, s_range=(0, 1.5))),
    ("eps1=-1 g=e^phi/2", dict(C=0.5, D=0.5, eps1=-1, s_range=(0, 2))),
    ("eps1=-1 g=cosh", dict(C=1, D=0, eps1=-1, s_range=(0, 2))),
    ("eps1=-1 g=2cosh", dict(C=2, D=0, eps1=-1, s_range=(0, 2))),
    ("eps1=-1 m<0", dict(C=0.1, D=1, eps1=-1, s_range=(0, 2))),
]
print(f"{'case':<19}{'c':>8}{'<U,U>':>9}  {'axis':<10}{'<B2,U> var':>11}")
for name, kw in cases:
    fc, rep = generate_slant_curve(SlantSpec(k1=Linear(1, 0.3), k2=1, **kw))
    print(f"{name:<19}{rep.verdict.F_mean:>8.3f}{rep.axis.U_norm_squared:>9.3f}  "
          f"{str(rep.axis.axis_class):<10}{rep.axis.B2_angle_variation:>11.1e}")

# %% conserved versus printed pair
spec = SlantSpec(C=1, D=0, s_range=(0, 1))
s = np.linspace(0, 1, 6)
m, n = conserved_pair(spec.profile, s)
pm, pn = printed_pair(spec.profile, s)
print("\n   s   conserved m, n      g cos + f sin")
for row in zip(s, m, n, pm):
    print("{:4.1f}  {:8.5f} {:8.5f}   {:8.5f}".format(*row))
