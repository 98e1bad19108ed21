"""
Curvature profiles ``k1(s), k2(s), k3(s)`` together with the signs
``eps1 = <N, N>`` and ``eps2 = <B2, B2>``.

Both profile classes expose the same callables ``k1, k2, k3`` and the
derived quantities used by the slant-helix tests: the ratio ``g = k3/k2``,
its derivative, and ``f = eps1 g' / k1`` with its derivative.
"""

import csv

import numpy as np
from scipy.interpolate import CubicSpline

from .curves import _read_rows, format_float
from .errors import NonMonotoneParameter, NonPositiveCurvature, SignatureViolation, TooFewSamples
from .functions import Product, as_function
from .numdiff import smoothed_derivative


def validate_signature(eps1, eps2) -> bool:
    """Frenet signature rule: every sign pair except ``(-1, -1)`` is allowed."""
    if eps1 not in (1, -1) or eps2 not in (1, -1):
        raise ValueError(f"signs must be +1 or -1, got ({eps1}, {eps2})")
    return not (eps1 == -1 and eps2 == -1)


def _check_signs(eps1, eps2):
    if not validate_signature(eps1, eps2):
        raise SignatureViolation("eps1 = -1 requires eps2 = +1")
    return int(eps1), int(eps2)


class CurvatureProfile:
    """Curvatures given as smooth functions of arclength.

    Parameters
    ----------
    k1, k2, k3 : SmoothFunction, callable or float
        Each must be positive on ``domain``; this is checked on a grid of
        ``check_points`` samples.
    eps1, eps2 : {+1, -1}
    domain : (float, float)
    """

    sampled = False

    def __init__(self, k1, k2, k3, eps1=1, eps2=1, domain=(0.0, 1.0), check_points=201):
        self.eps1, self.eps2 = _check_signs(eps1, eps2)
        self.k1 = as_function(k1)
        self.k2 = as_function(k2)
        self.k3 = as_function(k3)
        self.domain = (float(domain[0]), float(domain[1]))
        grid = np.linspace(*self.domain, check_points)
        for name, fn in (("k1", self.k1), ("k2", self.k2), ("k3", self.k3)):
            vals = np.asarray(fn(grid), dtype=float)
            if not np.all(vals > 0):
                bad = grid[np.argmax(~(vals > 0))]
                raise NonPositiveCurvature(f"{name} is not positive at s={bad:.6g}")

    def curvatures(self, s):
        return self.k1(s), self.k2(s), self.k3(s)

    def ratio(self, s, order=0):
        """``g = k3/k2`` or its first/second derivative (quotient rule)."""
        k2, k3 = self.k2, self.k3
        g = k3(s) / k2(s)
        if order == 0:
            return g
        g1 = (k3(s, 1) - g * k2(s, 1)) / k2(s)
        if order == 1:
            return g1
        if order == 2:
            return (k3(s, 2) - 2 * g1 * k2(s, 1) - g * k2(s, 2)) / k2(s)
        raise ValueError("order must be 0, 1 or 2")

    def slant_f(self, s):
        return self.eps1 * self.ratio(s, 1) / self.k1(s)

    def slant_f_prime(self, s):
        k1 = self.k1(s)
        return self.eps1 * (self.ratio(s, 2) * k1 - self.ratio(s, 1) * self.k1(s, 1)) / k1**2

    def with_eps2(self, eps2):
        return CurvatureProfile(self.k1, self.k2, self.k3, self.eps1, eps2, self.domain)

    def scaled(self, factor):
        """Multiply ``k2`` and ``k3`` by the same positive function ``factor``."""
        factor = as_function(factor)
        return CurvatureProfile(self.k1, Product(self.k2, factor), Product(self.k3, factor),
                                self.eps1, self.eps2, self.domain)

    def __repr__(self):
        return (f"CurvatureProfile(k1={self.k1!r}, k2={self.k2!r}, k3={self.k3!r}, "
                f"eps=({self.eps1:+d}, {self.eps2:+d}), domain={self.domain})")


class SampledProfile:
    """Curvatures tabulated on a strictly increasing grid.

    Derivatives of ``g`` and ``f`` come from local degree-4 least-squares
    fits over 21 samples (:func:`~slanthelix.numdiff.smoothed_derivative`).
    Off-grid values are cubic-spline interpolated.
    """

    sampled = True

    def __init__(self, s, k1, k2, k3, eps1=1, eps2=1):
        self.eps1, self.eps2 = _check_signs(eps1, eps2)
        s = np.asarray(s, dtype=float)
        arrays = [np.asarray(a, dtype=float) for a in (k1, k2, k3)]
        if s.ndim != 1 or any(a.shape != s.shape for a in arrays):
            raise ValueError("s, k1, k2, k3 must be 1-D arrays of equal length")
        if s.size < 5:
            raise ValueError("need at least 5 samples")
        if np.any(np.diff(s) <= 0):
            raise ValueError("s must be strictly increasing")
        for name, a in zip(("k1", "k2", "k3"), arrays):
            if not np.all(np.isfinite(a)):
                raise ValueError(f"{name} has non-finite samples")
            if not np.all(a > 0):
                bad = s[np.argmax(~(a > 0))]
                raise NonPositiveCurvature(f"{name} is not positive at s={bad:.6g}")
        self.s = s
        self.k1_values, self.k2_values, self.k3_values = arrays
        self.domain = (float(s[0]), float(s[-1]))
        self.g_values = self.k3_values / self.k2_values
        self.g_prime_values = smoothed_derivative(s, self.g_values)
        self.f_values = self.eps1 * self.g_prime_values / self.k1_values
        self.f_prime_values = smoothed_derivative(s, self.f_values)
        self._splines = {}

    def _interp(self, name, s):
        s_arr = np.asarray(s, dtype=float)
        idx = np.searchsorted(self.s, s_arr)
        idx_c = np.clip(idx, 0, self.s.size - 1)
        values = getattr(self, name)
        if np.all(self.s[idx_c] == s_arr):
            out = values[idx_c]
        else:
            if name not in self._splines:
                self._splines[name] = CubicSpline(self.s, values)
            out = self._splines[name](s_arr)
        return out if out.ndim else float(out)

    def k1(self, s, order=0):
        return self._interp("k1_values", s) if order == 0 else self._deriv("k1_values", s, order)

    def k2(self, s, order=0):
        return self._interp("k2_values", s) if order == 0 else self._deriv("k2_values", s, order)

    def k3(self, s, order=0):
        return self._interp("k3_values", s) if order == 0 else self._deriv("k3_values", s, order)

    def _deriv(self, name, s, order):
        key = (name, order)
        if key not in self._splines:
            self._splines[key] = CubicSpline(self.s, getattr(self, name)).derivative(order)
        return self._splines[key](s)

    def curvatures(self, s):
        return self.k1(s), self.k2(s), self.k3(s)

    def ratio(self, s, order=0):
        if order == 0:
            return self._interp("g_values", s)
        if order == 1:
            return self._interp("g_prime_values", s)
        raise ValueError("sampled profiles provide g and g' only")

    def slant_f(self, s):
        return self._interp("f_values", s)

    def slant_f_prime(self, s):
        return self._interp("f_prime_values", s)

    def with_eps2(self, eps2):
        return SampledProfile(self.s, self.k1_values, self.k2_values, self.k3_values,
                              self.eps1, eps2)

    def scaled(self, factor):
        factor = np.asarray(as_function(factor)(self.s), dtype=float)
        return SampledProfile(self.s, self.k1_values, self.k2_values * factor,
                              self.k3_values * factor, self.eps1, self.eps2)

    def __len__(self):
        return self.s.size

    def __repr__(self):
        return f"SampledProfile(n={self.s.size}, eps=({self.eps1:+d}, {self.eps2:+d}), domain={self.domain})"


def load_profile_csv(path, eps1=1, eps2=1) -> SampledProfile:
    """Read a ``s,k1,k2,k3`` table."""
    _, data = _read_rows(path, ("s", "k1", "k2", "k3"))
    if data.shape[0] < 5:
        raise TooFewSamples(f"{path}: {data.shape[0]} samples, need at least 5")
    s = data[:, 0]
    if np.any(np.diff(s) <= 0):
        raise NonMonotoneParameter(f"{path}: s must be strictly increasing")
    return SampledProfile(s, data[:, 1], data[:, 2], data[:, 3], eps1, eps2)


def save_profile_csv(path, s, k1, k2, k3):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["s", "k1", "k2", "k3"])
        for row in zip(s, k1, k2, k3):
            w.writerow([format_float(v) for v in row])


def phi(k1, s, s0=0.0, max_panel=1e-2):
    """Integrated first curvature ``int_{s0}^{s} k1``.

    Composite Simpson rule on the sorted evaluation points, with extra nodes
    inserted so that no panel is wider than ``max_panel``; exact when ``k1``
    is a cubic or lower. Accepts scalars or arrays.
    """
    k1 = as_function(k1)
    s_arr = np.asarray(s, dtype=float)
    flat = s_arr.ravel()
    lo, hi = min(s0, flat.min()), max(s0, flat.max())
    n_fill = int(np.ceil((hi - lo) / max_panel)) + 1
    nodes = np.unique(np.concatenate([flat, [s0], np.linspace(lo, hi, max(n_fill, 2))]))
    a, b = nodes[:-1], nodes[1:]
    panels = (b - a) / 6.0 * (k1(a) + 4.0 * k1(0.5 * (a + b)) + k1(b))
    cum = np.concatenate([[0.0], np.cumsum(panels)])
    cum -= cum[np.searchsorted(nodes, s0)]
    out = cum[np.searchsorted(nodes, flat)].reshape(s_arr.shape)
    return out if out.ndim else float(out)
