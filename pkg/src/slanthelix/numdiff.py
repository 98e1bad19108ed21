"""
Finite-difference weights, stencil differentiation and Simpson quadrature.
"""

from functools import lru_cache
from math import factorial

import numpy as np
from scipy.signal import savgol_filter

#: Consistency order of every central stencil used by the package.
STENCIL_ACCURACY = 4


def fd_weights(offsets, order: int) -> np.ndarray:
    """Weights ``w`` with ``sum(w_j f(x + d_j)) ~ f^(order)(x)``.

    ``offsets`` may be any distinct real numbers (non-uniform grids are fine).
    Solves the moment equations directly, which is well conditioned for the
    handful of nodes used here when the offsets are O(1).
    """
    d = np.asarray(offsets, dtype=float)
    n = d.size
    if order >= n:
        raise ValueError(f"need more than {order} nodes for derivative order {order}")
    scale = np.max(np.abs(d))
    if scale == 0:
        raise ValueError("offsets must not all be zero")
    t = d / scale
    A = np.vander(t, n, increasing=True).T
    rhs = np.zeros(n)
    rhs[order] = factorial(order)
    return np.linalg.solve(A, rhs) / scale**order


@lru_cache(maxsize=None)
def central_offsets(order: int, accuracy: int = STENCIL_ACCURACY) -> tuple:
    """Integer offsets ``-m..m`` of the narrowest central stencil."""
    m = (order + 1) // 2 + accuracy // 2 - 1
    return tuple(range(-m, m + 1))


@lru_cache(maxsize=None)
def _central_weights(order: int, accuracy: int) -> np.ndarray:
    return fd_weights(central_offsets(order, accuracy), order)


def central_weights(order: int, accuracy: int = STENCIL_ACCURACY) -> np.ndarray:
    """Weights for unit spacing; divide by ``h**order`` for step ``h``."""
    return _central_weights(order, accuracy).copy()


def order_step(h: float, order: int, accuracy: int = STENCIL_ACCURACY) -> float:
    """Step used for derivative ``order`` given the first-derivative step ``h``.

    Round-off in a k-th difference grows like ``eps / h**k``; rescaling
    ``h -> h**((p + 1) / (p + k))`` keeps the truncation/round-off balance of
    the first derivative for every order. ``h`` itself is used for order 1.
    """
    return h ** ((accuracy + 1) / (accuracy + order))


def stencil_reach(h: float, max_order: int) -> float:
    """Largest distance from ``s`` sampled by :func:`stencil_derivatives`."""
    return max(max(central_offsets(k)) * order_step(h, k) for k in range(1, max_order + 1))


def stencil_derivatives(func, s: float, max_order: int, h: float) -> list:
    """Central finite-difference derivatives ``f', ..., f^(max_order)`` at ``s``.

    ``func`` maps a float to an array; it is called at the stencil nodes only.
    """
    out = []
    f0 = np.asarray(func(s), dtype=float)
    for k in range(1, max_order + 1):
        hk = order_step(h, k)
        w = _central_weights(k, STENCIL_ACCURACY)
        acc = np.zeros_like(f0)
        for j, wj in zip(central_offsets(k), w):
            if wj != 0.0:
                # f0 subtracted so the sum is formed from small differences
                acc = acc + wj * (np.asarray(func(s + j * hk), dtype=float) - f0)
        out.append(acc / hk**k)
    return out


def sampled_derivative(x, y, order: int = 1, width: int = 5) -> np.ndarray:
    """Derivative of tabulated data at every node.

    Uses ``width``-point stencils (Fornberg-style weights on the actual,
    possibly non-uniform, nodes), centred in the interior and shifted
    one-sided near the ends. ``width=5`` is fourth-order for first
    derivatives.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.size
    if n < width:
        raise ValueError(f"need at least {width} samples, got {n}")
    half = width // 2
    out = np.empty_like(y)
    for i in range(n):
        lo = min(max(i - half, 0), n - width)
        idx = slice(lo, lo + width)
        w = fd_weights(x[idx] - x[i], order)
        out[i] = np.tensordot(w, y[idx], axes=(0, 0))
    return out


def smoothed_derivative(x, y, window: int = 21, degree: int = 4) -> np.ndarray:
    """First derivative from local least-squares polynomials.

    At every node a degree-``degree`` polynomial is fitted to the ``window``
    nearest samples and differentiated there (Savitzky-Golay on uniform
    grids). Compared with :func:`sampled_derivative` this damps the
    sample-to-sample jitter of curvatures recovered from point data, which
    matters once derivatives are nested (``f = g'/k1`` then ``f'``).
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.size
    window = min(window, n if n % 2 else n - 1)
    degree = min(degree, window - 1)
    dx = np.diff(x)
    if np.allclose(dx, dx[0], rtol=1e-9, atol=0.0):
        return savgol_filter(y, window, degree, deriv=1, delta=float(dx[0]), axis=0)
    half = window // 2
    out = np.empty_like(y)
    for i in range(n):
        lo = min(max(i - half, 0), n - window)
        idx = slice(lo, lo + window)
        scale = max(x[lo + window - 1] - x[i], x[i] - x[lo])
        V = np.vander((x[idx] - x[i]) / scale, degree + 1, increasing=True)
        coef, *_ = np.linalg.lstsq(V, y[idx], rcond=None)
        out[i] = coef[1] / scale
    return out


def simpson(func, a: float, b: float, panels: int = 2) -> float:
    """Composite Simpson rule for ``int_a^b func``; ``panels`` is made even."""
    panels = max(2, panels + panels % 2)
    x = np.linspace(a, b, panels + 1)
    y = np.asarray(func(x), dtype=float) * np.ones_like(x)
    w = np.ones(panels + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return float((b - a) / (3.0 * panels) * np.dot(w, y))


def cumulative_simpson(x, y) -> np.ndarray:
    """Running integral of samples ``y(x)`` starting at zero at ``x[0]``.

    Each interval is integrated with the quadratic through three
    neighbouring nodes (Simpson's rule split in halves), so the result is
    exact for quadratics on any grid.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.size
    out = np.zeros(n)
    if n == 1:
        return out
    if n == 2:
        out[1] = 0.5 * (x[1] - x[0]) * (y[0] + y[1])
        return out
    for i in range(n - 1):
        # quadratic through nodes j, j+1, j+2 containing interval [i, i+1]
        j = min(i, n - 3)
        xs, ys = x[j:j + 3], y[j:j + 3]
        coef = np.polyfit(xs - xs[0], ys, 2)
        anti = np.polyint(coef)
        out[i + 1] = out[i] + np.polyval(anti, x[i + 1] - xs[0]) - np.polyval(anti, x[i] - xs[0])
    return out
