"""
Detection and analysis of spacelike B2-slant helices.

A curve is a B2-slant helix when ``<B2, U>`` is constant for some fixed
vector ``U``. With ``g = k3/k2`` and ``f = eps1 g' / k1`` this happens
exactly when ``f' = -k1 g``; the axis is then

    U = -f T + eps1 g N - B2,

and ``F = g**2 + eps1 (g'/k1)**2`` is constant along the curve.
"""

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.linalg import eigh

from .errors import NotSlant
from .functions import as_function
from .minkowski import CausalCharacter, causal_character, inner
from .numdiff import cumulative_simpson
from .profile import phi

ANALYTIC_TOL = 1e-6
SAMPLED_TOL = 1e-3


def _default_tol(profile, tol):
    if tol is not None:
        return tol
    return SAMPLED_TOL if profile.sampled else ANALYTIC_TOL


def _default_grid(profile, grid):
    if grid is not None:
        return np.asarray(grid, dtype=float)
    if profile.sampled:
        return profile.s
    return np.linspace(*profile.domain, 201)


def ratio_g(profile, s):
    """``k3/k2``."""
    return profile.ratio(s)


def ratio_g_prime(profile, s):
    """``(k3/k2)'``: chain rule for functional profiles, differences for sampled ones."""
    return profile.ratio(s, 1)


def characteristic_F(profile, s):
    """``g**2 + eps1 * (g' / k1)**2``; depends on neither ``eps2`` nor the scale of ``k2, k3``."""
    g = profile.ratio(s)
    return g**2 + profile.eps1 * (profile.ratio(s, 1) / profile.k1(s)) ** 2


def slant_f(profile, s):
    """``f = eps1 g' / k1``."""
    return profile.slant_f(s)


@dataclass(frozen=True)
class SlantVerdict:
    """Outcome of :func:`check_slant`.

    ``f_residual_max`` is ``max |f' + k1 g|`` over the grid; the verdict
    compares it with ``tol * max(1, max k1 |g|)``.
    """

    is_slant: bool
    F_samples: np.ndarray
    F_mean: float
    F_spread: float
    f_residual_max: float
    degenerate_constant_ratio: bool
    grid: np.ndarray = field(repr=False, default=None)
    tol: float = ANALYTIC_TOL

    @property
    def F_constant(self) -> bool:
        return self.F_spread <= self.tol * max(1.0, abs(self.F_mean))


def check_slant(profile, grid=None, tol=None) -> SlantVerdict:
    """Decide whether ``profile`` belongs to a B2-slant helix.

    The criterion is the pair of conditions ``f k1 = eps1 g'`` (true by the
    definition of ``f``) and ``f' = -k1 g``. A nonzero constant ratio ``g``
    makes ``F`` constant but admits no fixed axis; such profiles are flagged
    with ``degenerate_constant_ratio`` and rejected.

    Parameters
    ----------
    profile : CurvatureProfile or SampledProfile
    grid : array_like, optional
        Evaluation points; the sample grid or 201 points on the domain.
    tol : float, optional
        1e-6 for functional profiles and 1e-3 for sampled ones by default.
    """
    tol = _default_tol(profile, tol)
    s = _default_grid(profile, grid)
    k1 = np.asarray(profile.k1(s), dtype=float)
    g = np.asarray(profile.ratio(s), dtype=float)
    g1 = np.asarray(profile.ratio(s, 1), dtype=float)
    f_prime = np.asarray(profile.slant_f_prime(s), dtype=float)
    F = g**2 + profile.eps1 * (g1 / k1) ** 2
    residual = float(np.max(np.abs(f_prime + k1 * g)))
    degenerate = bool(np.max(np.abs(g1)) <= tol * max(1.0, np.max(np.abs(g)))
                      and np.min(np.abs(g)) > tol)
    scale = max(1.0, float(np.max(k1 * np.abs(g))))
    is_slant = residual <= tol * scale and not degenerate
    return SlantVerdict(
        is_slant=bool(is_slant),
        F_samples=F,
        F_mean=float(np.mean(F)),
        F_spread=float(np.max(F) - np.min(F)),
        f_residual_max=residual,
        degenerate_constant_ratio=degenerate,
        grid=s,
        tol=tol,
    )


def axis_vector(frame, profile, s) -> np.ndarray:
    """``U = -f T + eps1 g N - B2`` in ambient coordinates (not normalized).

    ``<U, U> = f**2 + eps1 g**2 + eps2`` and ``<U, B2> = -eps2``.
    """
    f = float(profile.slant_f(s))
    g = float(profile.ratio(s))
    return -f * frame.T + profile.eps1 * g * frame.N - frame.B2


@dataclass(frozen=True)
class AxisReport:
    U_samples: np.ndarray
    U_variation: float
    B2_angle_samples: np.ndarray
    B2_angle_variation: float
    B1_orthogonality_max: float
    axis_class: CausalCharacter
    U_norm_squared: float
    m_value: Optional[float] = None

    @property
    def axis(self) -> np.ndarray:
        return self.U_samples[0]

    @property
    def B2_angle(self) -> float:
        return float(self.B2_angle_samples[0])


def axis_report(fc, profile, tol=None) -> AxisReport:
    """Evaluate the axis along a framed curve and test that it is fixed.

    ``fc`` and ``profile`` must describe the same curve; the profile is
    evaluated at ``fc.s_values``. ``U0`` is the axis at the first sample.

    * ``U_variation``: max component-wise ``|U(s) - U0|``
    * ``B2_angle_variation``: max ``|<B2(s), U0> - <B2(s0), U0>|``
    * ``B1_orthogonality_max``: max ``|<B1(s), U0>|``
    * ``axis_class``: causal character of ``U0``; ``tol`` (relative to the
      size of ``U0``) decides lightlike
    * ``m_value``: ``g**2 - (g'/k1)**2`` at ``s0`` when ``eps1 = -1``
    """
    tol = _default_tol(profile, tol)
    s = np.asarray(fc.s_values, dtype=float)
    f = np.asarray(profile.slant_f(s), dtype=float)
    g = np.asarray(profile.ratio(s), dtype=float)
    U = -f[:, None] * fc.T + profile.eps1 * g[:, None] * fc.N - fc.B2
    U0 = U[0]
    b2 = inner(fc.B2, U0)
    b1 = inner(fc.B1, U0)
    norm2 = float(inner(U0, U0))
    scale = max(1.0, float(np.sum(U0**2)))
    m = None
    if profile.eps1 == -1:
        m = float(g[0] ** 2 - (profile.ratio(s[0], 1) / profile.k1(s[0])) ** 2)
    return AxisReport(
        U_samples=U,
        U_variation=float(np.max(np.abs(U - U0))),
        B2_angle_samples=b2,
        B2_angle_variation=float(np.max(np.abs(b2 - b2[0]))),
        B1_orthogonality_max=float(np.max(np.abs(b1))),
        axis_class=_classify(norm2, tol * scale),
        U_norm_squared=norm2,
        m_value=m,
    )


def _classify(norm2, tol):
    if norm2 > tol:
        return CausalCharacter.SPACELIKE
    if norm2 < -tol:
        return CausalCharacter.TIMELIKE
    return CausalCharacter.LIGHTLIKE


@dataclass(frozen=True)
class AxisClass:
    c: float
    U_norm_squared: float
    character: CausalCharacter

    def __iter__(self):
        return iter((self.c, self.U_norm_squared, self.character))


def classify_axis(profile, grid=None, tol=None) -> AxisClass:
    """Constant ``c`` of ``F``, ``<U, U> = eps1 c + eps2`` and the axis' causal character.

    For ``eps1 = -1`` (so ``eps2 = +1`` and ``c`` is the constant ``m``)
    the axis is spacelike for ``m < 1``, lightlike for ``m = 1`` and
    timelike for ``m > 1``.

    Raises
    ------
    NotSlant
        ``profile`` fails :func:`check_slant`.
    """
    verdict = check_slant(profile, grid, tol)
    if not verdict.is_slant:
        raise NotSlant(
            f"profile is not a B2-slant helix (residual {verdict.f_residual_max:.3g}"
            + (", constant ratio" if verdict.degenerate_constant_ratio else "") + ")")
    c = verdict.F_mean
    norm2 = profile.eps1 * c + profile.eps2
    return AxisClass(c, norm2, _classify(norm2, verdict.tol * max(1.0, abs(c))))


def _phi_of(profile, s):
    s0 = profile.domain[0]
    if profile.sampled:
        cum = cumulative_simpson(profile.s, profile.k1_values)
        return np.interp(s, profile.s, cum)
    return phi(profile.k1, s, s0)


def constants_AB(profile, a3, s):
    """Constants ``A, B`` of the ``a1`` solution for ``eps1 = -1``.

    ``A = a3 (g sinh(phi) - (g'/k1) cosh(phi))`` and
    ``B = a3 (-g cosh(phi) + (g'/k1) sinh(phi))`` with
    ``phi = int_{s0}^{s} k1``. Both are constant on slant helices and
    ``B**2 - A**2 = a3**2 (g**2 - (g'/k1)**2)``.
    """
    if profile.eps1 != -1:
        raise ValueError("constants_AB applies to eps1 = -1 only")
    p = _phi_of(profile, s)
    g = profile.ratio(s)
    h = profile.ratio(s, 1) / profile.k1(s)
    A = a3 * (g * np.sinh(p) - h * np.cosh(p))
    B = a3 * (-g * np.cosh(p) + h * np.sinh(p))
    return A, B


@dataclass(frozen=True)
class A1Solution:
    s: np.ndarray
    numeric: np.ndarray
    closed_form: np.ndarray

    @property
    def discrepancy(self) -> float:
        return float(np.max(np.abs(self.numeric - self.closed_form)))


def solve_a1(k1, eps1, a1_0, a1_prime_0, s_range=(0.0, 1.0), step=1e-3) -> A1Solution:
    """Integrate ``eps1 a'' - eps1 (k1'/k1) a' + k1**2 a = 0`` and compare with closed forms.

    The closed form is ``A cos(phi) + B sin(phi)`` for ``eps1 = +1`` and
    ``A cosh(phi) + B sinh(phi)`` for ``eps1 = -1``, where
    ``phi = int_{s0}^{s} k1``, ``A = a(s0)`` and ``B = a'(s0) / k1(s0)``.
    The numerical solution is classical RK4 on ``(a, a')``.
    """
    if eps1 not in (1, -1):
        raise ValueError("eps1 must be +1 or -1")
    k1 = as_function(k1)
    s0, s1 = map(float, s_range)
    n = max(1, int(np.ceil((s1 - s0) / step - 1e-9)))
    s = np.linspace(s0, s1, n + 1)
    h = (s1 - s0) / n

    def rhs(t, y):
        k, dk = k1(t), k1(t, 1)
        return np.array([y[1], (dk / k) * y[1] - eps1 * k * k * y[0]])

    y = np.array([a1_0, a1_prime_0], dtype=float)
    numeric = np.empty(n + 1)
    numeric[0] = y[0]
    for i in range(n):
        t = s[i]
        a = rhs(t, y)
        b = rhs(t + 0.5 * h, y + 0.5 * h * a)
        c = rhs(t + 0.5 * h, y + 0.5 * h * b)
        d = rhs(t + h, y + h * c)
        y = y + (h / 6.0) * (a + 2 * b + 2 * c + d)
        numeric[i + 1] = y[0]

    p = phi(k1, s, s0)
    A, B = a1_0, a1_prime_0 / float(k1(s0))
    if eps1 == 1:
        closed = A * np.cos(p) + B * np.sin(p)
    else:
        closed = A * np.cosh(p) + B * np.sinh(p)
    return A1Solution(s, numeric, closed)


@dataclass(frozen=True)
class AxisSearch:
    """Best fixed direction found by :func:`axis_search`.

    ``relative_residual`` is ``rms(<B2, U> - a) / rms(<B2, U>)`` at the
    optimum: 0 for a slant helix, and of order 1 when no direction keeps
    ``<B2, U>`` constant. It does not depend on the length of ``U``.
    """

    U: np.ndarray
    a: float
    relative_residual: float


def axis_search(B2_samples) -> AxisSearch:
    """Brute-force search for ``U != 0`` with ``<B2(s_i), U>`` constant.

    Minimizes ``sum_i (<B2_i, U> - a)**2 / sum_i <B2_i, U>**2`` over ``U``
    and the constant ``a`` (a generalized symmetric eigenproblem), so the
    result measures relative, not absolute, variation. ``U`` is returned
    with Euclidean length 1.
    """
    M = np.asarray(B2_samples, dtype=float) * np.array([-1.0, 1.0, 1.0, 1.0])
    Mc = M - M.mean(axis=0)
    w, v = eigh(Mc.T @ Mc, M.T @ M)
    U = v[:, 0] / np.linalg.norm(v[:, 0])
    a = float(np.mean(M @ U))
    return AxisSearch(U, a, float(np.sqrt(max(w[0], 0.0))))


@dataclass(frozen=True)
class SlantReport:
    """Verdict, axis diagnostics and (for slant profiles) the axis classification."""

    verdict: SlantVerdict
    axis: AxisReport
    classification: Optional[AxisClass] = None

    @property
    def is_slant(self) -> bool:
        return self.verdict.is_slant

    def to_dict(self) -> dict:
        """JSON-ready summary with the stable key set used by the CLI."""
        v, a = self.verdict, self.axis
        return {
            "is_slant": v.is_slant,
            "F_mean": v.F_mean,
            "F_spread": v.F_spread,
            "f_residual_max": v.f_residual_max,
            "degenerate_constant_ratio": v.degenerate_constant_ratio,
            "axis": [float(x) for x in a.axis],
            "axis_class": str(a.axis_class),
            "axis_norm_squared": a.U_norm_squared,
            "B2_angle": a.B2_angle,
            "B2_angle_variation": a.B2_angle_variation,
            "m": a.m_value,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def slant_report(fc, profile, tol=None) -> SlantReport:
    """Run :func:`check_slant` on the samples of ``fc`` plus :func:`axis_report`."""
    verdict = check_slant(profile, fc.s_values, tol)
    axis = axis_report(fc, profile, tol)
    cls = None
    if verdict.is_slant:
        c = verdict.F_mean
        norm2 = profile.eps1 * c + profile.eps2
        cls = AxisClass(c, norm2, _classify(norm2, verdict.tol * max(1.0, abs(c))))
    return SlantReport(verdict, axis, cls)
