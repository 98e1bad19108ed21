"""
Synthesis of B2-slant helices from the integral characterization.

A profile is slant exactly when

    k3 / k2 = C eta(phi) + D mu(phi),    phi(s) = int_{s0}^{s} k1,

with ``(eta, mu) = (cos, sin)`` for ``eps1 = +1`` and ``(cosh, sinh)`` for
``eps1 = -1``. :func:`generate_slant_curve` builds such a profile and
integrates the Frenet system to obtain the curve itself.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import NonPositiveK3
from .frenet import DEFAULT_RK_STEP, integrate_frenet
from .functions import Const, Linear, Product, SmoothFunction, as_function
from .profile import CurvatureProfile, _check_signs, phi
from .slant import slant_report

__all__ = [
    "SlantRatio",
    "SlantSpec",
    "conserved_pair",
    "generate_slant_curve",
    "max_positive_phi",
    "phi",
    "printed_pair",
    "slant_profile",
]


def _phi_closed(k1, s, s0):
    """Closed-form ``int_{s0}^{s} k1`` for constant and linear ``k1``, else quadrature."""
    s = np.asarray(s, dtype=float)
    if isinstance(k1, Const):
        out = k1.value * (s - s0)
    elif isinstance(k1, Linear):
        out = k1.a * (s - s0) + 0.5 * k1.b * (s * s - s0 * s0)
    else:
        return phi(k1, s, s0)
    return out if out.ndim else float(out)


def _eta_mu(eps1, p):
    if eps1 == 1:
        return np.cos(p), np.sin(p)
    return np.cosh(p), np.sinh(p)


class SlantRatio(SmoothFunction):
    """``g(s) = C eta(phi(s)) + D mu(phi(s))`` with two exact derivatives.

    ``g' = k1 (C eta' + D mu')`` and, because ``eta'' = -eps1 eta`` (same for
    ``mu``), ``g'' = k1' (C eta' + D mu') - eps1 k1**2 g``.
    """

    def __init__(self, k1, C, D, eps1, s0=0.0):
        self.k1 = as_function(k1)
        self.C, self.D = float(C), float(D)
        self.eps1 = int(eps1)
        self.s0 = float(s0)

    def phi(self, s):
        return _phi_closed(self.k1, s, self.s0)

    def __call__(self, s, order=0):
        eta, mu = _eta_mu(self.eps1, self.phi(s))
        g = self.C * eta + self.D * mu
        if order == 0:
            return g
        # d/dphi of (C eta + D mu)
        dg = -self.eps1 * self.C * mu + self.D * eta
        if order == 1:
            return self.k1(s) * dg
        if order == 2:
            return self.k1(s, 1) * dg - self.eps1 * self.k1(s) ** 2 * g
        raise ValueError("order must be 0, 1 or 2")

    def __repr__(self):
        return f"SlantRatio(C={self.C!r}, D={self.D!r}, eps1={self.eps1:+d})"


def max_positive_phi(C, D, eps1) -> float:
    """Supremum of ``Phi`` such that ``C eta + D mu > 0`` on ``[0, Phi)``.

    Zero when ``C <= 0`` and ``inf`` when the ratio never vanishes.
    """
    if C <= 0:
        return 0.0
    if eps1 == 1:
        # C cos + D sin = R cos(phi - alpha)
        return float(np.arctan2(D, C) + np.pi / 2)
    if D >= -C:
        return np.inf
    return float(np.arctanh(-C / D))


@dataclass
class SlantSpec:
    """Parameters of a generated slant helix.

    ``k1`` and ``k2`` are anything :func:`~slanthelix.functions.as_function`
    accepts. Construction validates the signs, the positivity of ``k1, k2``
    and of ``k3 = k2 (C eta + D mu)`` on ``s_range``.

    Raises
    ------
    SignatureViolation
        ``eps1 = eps2 = -1``.
    NonPositiveCurvature
        ``k1`` or ``k2`` is not positive.
    NonPositiveK3
        The ratio ``C eta + D mu`` reaches zero on the range.
    """

    k1: object = 1.0
    k2: object = 1.0
    C: float = 1.0
    D: float = 0.0
    eps1: int = 1
    eps2: int = 1
    s_range: tuple = (0.0, 1.0)
    step: float = DEFAULT_RK_STEP
    profile: CurvatureProfile = field(init=False, repr=False)

    def __post_init__(self):
        self.eps1, self.eps2 = _check_signs(self.eps1, self.eps2)
        self.k1, self.k2 = as_function(self.k1), as_function(self.k2)
        self.C, self.D = float(self.C), float(self.D)
        self.s_range = (float(self.s_range[0]), float(self.s_range[1]))
        if not self.s_range[0] < self.s_range[1]:
            raise ValueError(f"empty range {self.s_range}")
        if not self.step > 0:
            raise ValueError("step must be positive")
        ratio = SlantRatio(self.k1, self.C, self.D, self.eps1, self.s_range[0])
        # k1 > 0 makes phi increasing, so the ratio is positive on the range
        # iff phi(s_max) stays below the first zero
        if not ratio.phi(self.s_range[1]) < max_positive_phi(self.C, self.D, self.eps1):
            raise NonPositiveK3(
                f"k3/k2 = C*eta(phi) + D*mu(phi) is not positive on {self.s_range} "
                f"(C={self.C:g}, D={self.D:g}, eps1={self.eps1:+d})")
        self.profile = CurvatureProfile(self.k1, self.k2, Product(self.k2, ratio),
                                        self.eps1, self.eps2, self.s_range)

    @property
    def ratio(self) -> SlantRatio:
        return self.profile.k3.v


def slant_profile(spec: SlantSpec) -> CurvatureProfile:
    """Profile with ``k3 = k2 (C eta(phi) + D mu(phi))``."""
    return spec.profile


def _phi_of(profile, s):
    k3 = profile.k3
    if isinstance(k3, Product) and isinstance(k3.v, SlantRatio):
        return k3.v.phi(s)
    return phi(profile.k1, s, profile.domain[0])


def conserved_pair(profile, s):
    """First integrals of ``g' = eps1 f k1, f' = -k1 g``.

    ``eps1 = +1``: ``(g cos(phi) - f sin(phi), g sin(phi) + f cos(phi))``;
    ``eps1 = -1``: ``(g cosh(phi) + f sinh(phi), g sinh(phi) + f cosh(phi))``.
    ``phi`` is measured from the start of the profile's domain. For the
    generated ratio ``C eta + D mu`` the pair equals ``(C, D)`` when
    ``eps1 = +1`` and ``(C, -D)`` when ``eps1 = -1``.
    """
    p = _phi_of(profile, s)
    g, f = profile.ratio(s), profile.slant_f(s)
    eta, mu = _eta_mu(profile.eps1, p)
    if profile.eps1 == 1:
        return g * eta - f * mu, g * mu + f * eta
    return g * eta + f * mu, g * mu + f * eta


def printed_pair(profile, s):
    """``(g eta + f mu, g mu - eps1 f eta)``.

    Coincides with :func:`conserved_pair` for ``eps1 = -1``; for
    ``eps1 = +1`` it is *not* conserved (its derivative is
    ``2 k1 (f cos(phi) - g sin(phi))``) and is kept only to demonstrate that.
    """
    p = _phi_of(profile, s)
    g, f = profile.ratio(s), profile.slant_f(s)
    eta, mu = _eta_mu(profile.eps1, p)
    return g * eta + f * mu, g * mu - profile.eps1 * f * eta


def reconstruct_f(profile, s, pair):
    """``f`` recovered from conserved constants ``(m, n)``.

    ``eps1 = +1``: ``n cos(phi) - m sin(phi)``; ``eps1 = -1``:
    ``n cosh(phi) - m sinh(phi)``.
    """
    m, n = pair
    eta, mu = _eta_mu(profile.eps1, _phi_of(profile, s))
    return n * eta - m * mu


def generate_slant_curve(spec: SlantSpec, init_point=None, init_frame=None,
                         precision="double", tol=None):
    """Integrate the Frenet system for ``spec`` and analyze the result.

    Returns
    -------
    framed : FramedCurve
    report : SlantReport
        :func:`~slanthelix.slant.check_slant` on the sample grid, the axis
        diagnostics along ``framed`` and the axis classification.
    """
    profile = slant_profile(spec)
    fc = integrate_frenet(profile, init_point, init_frame, spec.s_range, spec.step,
                          precision=precision)
    return fc, slant_report(fc, profile, tol)
