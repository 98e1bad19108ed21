"""
Vectors, causal characters and Frenet frames in Minkowski 4-space
=================================================================

The metric is ``-dx1^2 + dx2^2 + dx3^2 + dx4^2``. We classify a few vectors,
orthonormalize a basis with the indefinite Gram-Schmidt process and then
read the Frenet frame and curvatures of the curve

    x(s) = (sinh s, cosh s, sqrt(2) cos s, sqrt(2) sin s),

which has unit speed and constant curvatures.
"""

import numpy as np

from slanthelix import (
    causal_character,
    frame_at,
    gram_schmidt_indefinite,
    hyperbolic_circular,
    inner,
    pseudo_norm,
)

# %% causal characters
for v in ([1, 0, 0, 0], [0, 3, 4, 0], [1, 1, 0, 0], [0, 0, 0, 0]):
    print(f"{str(v):>14}  <v,v> = {inner(v, v):+5.1f}  |v| = {pseudo_norm(v):.1f}  {causal_character(v)}")

# %% Gram-Schmidt: one timelike leg, signs recorded per vector
e1, e2, e3, e4 = np.eye(4)
res = gram_schmidt_indefinite([e2, e2 + e3, e4 + 0.5 * e2, e1 + 0.2 * e3])
print("\northonormalized rows:\n", np.round(res.vectors, 12))
print("signs:", res.signs, " defect:", res.defect())

# %% the Frenet frame of the hyperbolic-circular curve
curve = hyperbolic_circular(1.0, np.sqrt(2.0))
frame, k = frame_at(curve, 0.7)
print(f"\nat s = 0.7: eps1 = {frame.eps1:+d}, eps2 = {frame.eps2:+d}")
print(f"k1 = {k.k1:.10f}  (sqrt 3     = {np.sqrt(3):.10f})")
print(f"k2 = {k.k2:.10f}  (2 sqrt6/3  = {2 * np.sqrt(6) / 3:.10f})")
print(f"k3 = {k.k3:.10f}  (sqrt3 / 3  = {np.sqrt(3) / 3:.10f})")
print("B1 is timelike:", causal_character(frame.B1))
