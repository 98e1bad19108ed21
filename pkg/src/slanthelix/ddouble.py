"""
Minimal double-double arithmetic on numpy arrays.

A value is a pair ``(hi, lo)`` of float64 arrays with ``|lo| <= ulp(hi)/2``,
giving roughly 32 significant digits. Only the operations needed by the
Frenet integrator are provided: sums of double-doubles and products with
plain doubles.
"""

import numpy as np

_SPLIT = 134217729.0  # 2**27 + 1


def two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _split(a):
    t = _SPLIT * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def add(x, y):
    s, e = two_sum(x[0], y[0])
    t, f = two_sum(x[1], y[1])
    s, e = quick_two_sum(s, e + t)
    return quick_two_sum(s, e + f)


def scale(x, c):
    """Product of a double-double ``x`` and a double (array) ``c``."""
    p, e = two_prod(x[0], c)
    return quick_two_sum(p, e + x[1] * c)


def from_double(a):
    a = np.asarray(a, dtype=float)
    return a.copy(), np.zeros_like(a)


def matmul(a, x):
    """``a @ x`` for a double array ``a`` and double-double ``x`` (batched).

    ``a`` has shape ``(..., m, k)`` and ``x`` parts ``(..., k, n)``.
    """
    a4 = a[..., :, :, None]
    p, e = two_prod(a4, x[0][..., None, :, :])
    e = e + a4 * x[1][..., None, :, :]
    acc = (p[..., 0, :], e[..., 0, :])
    for j in range(1, a.shape[-1]):
        acc = add(acc, (p[..., j, :], e[..., j, :]))
    return acc


def matmul_dd(a, x):
    """``a @ x`` with both factors double-double (batched)."""
    a_hi, a_lo = a[0][..., :, :, None], a[1][..., :, :, None]
    x_hi, x_lo = x[0][..., None, :, :], x[1][..., None, :, :]
    p, e = two_prod(a_hi, x_hi)
    e = e + a_hi * x_lo + a_lo * x_hi
    acc = (p[..., 0, :], e[..., 0, :])
    for j in range(1, a[0].shape[-1]):
        acc = add(acc, (p[..., j, :], e[..., j, :]))
    return acc
