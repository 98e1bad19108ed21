"""
Frenet apparatus of spacelike curves in Minkowski 4-space.

The frame ``(T, N, B1, B2)`` obeys

    T'  = k1 N
    N'  = -eps1 k1 T + k2 B1
    B1' = eps2 k2 N + k3 B2
    B2' = eps1 k3 B1

with Gram matrix ``diag(1, eps1, -eps1*eps2, eps2)``.
"""

import csv
from dataclasses import dataclass, field

import numpy as np

from . import ddouble as dd
from .curves import SampledCurve, _read_rows, format_float
from .errors import (
    DegenerateFrame,
    DependentBasis,
    InconsistentSignature,
    InvalidInitialFrame,
    NotUnitSpeed,
    NullIntermediate,
    SignatureViolation,
)
from .minkowski import METRIC, NULL_TOL, gram, gram_schmidt_indefinite, inner, pseudo_norm
from .numdiff import sampled_derivative
from .profile import SampledProfile, validate_signature

#: Curvatures below this are reported as a degenerate frame.
CURVATURE_TOL = 1e-6
INITIAL_FRAME_TOL = 1e-10
DEFAULT_RK_STEP = 1e-3
FRAME_COLUMNS = (
    ["s", "x1", "x2", "x3", "x4"]
    + [f"{leg}{i}" for leg in ("T", "N", "B1", "B2") for i in range(1, 5)]
    + ["defect"]
)


def gram_target(eps1, eps2) -> np.ndarray:
    return np.diag([1.0, eps1, -eps1 * eps2, eps2])


@dataclass(frozen=True)
class FrenetFrame:
    T: np.ndarray
    N: np.ndarray
    B1: np.ndarray
    B2: np.ndarray
    eps1: int = 1
    eps2: int = 1

    @classmethod
    def from_matrix(cls, m, eps1, eps2):
        m = np.asarray(m, dtype=float)
        return cls(m[0].copy(), m[1].copy(), m[2].copy(), m[3].copy(), int(eps1), int(eps2))

    @property
    def matrix(self) -> np.ndarray:
        """Rows ``T, N, B1, B2``."""
        return np.array([self.T, self.N, self.B1, self.B2])

    def defect(self) -> float:
        return orthonormality_defect(self)


@dataclass(frozen=True)
class CurvatureSample:
    k1: float
    k2: float
    k3: float

    def __iter__(self):
        return iter((self.k1, self.k2, self.k3))


def orthonormality_defect(frame: FrenetFrame) -> float:
    """Largest deviation of the frame's Gram matrix from ``diag(1, e1, -e1 e2, e2)``."""
    return float(np.max(np.abs(gram(frame.matrix) - gram_target(frame.eps1, frame.eps2))))


def canonical_frame(eps1=1, eps2=1) -> FrenetFrame:
    """Coordinate frame with ``T = e2`` and the prescribed signs.

    ``N = e3`` when ``eps1 = +1`` and ``N = e1`` (timelike) when ``eps1 = -1``;
    the binormals take the remaining axes so that the Gram matrix matches.
    """
    if not validate_signature(eps1, eps2):
        raise SignatureViolation("eps1 = -1 requires eps2 = +1")
    e1, e2, e3, e4 = np.eye(4)
    if eps1 == 1 and eps2 == 1:
        legs = (e2, e3, e1, e4)
    elif eps1 == 1:
        legs = (e2, e3, e4, e1)
    else:
        legs = (e2, e1, e3, e4)
    return FrenetFrame(*legs, eps1=eps1, eps2=eps2)


def frame_at(curve, s, tol=NULL_TOL, unit_speed_tol=None, curvature_tol=CURVATURE_TOL):
    """Frenet frame and curvatures of ``curve`` at ``s``.

    The frame is the indefinite Gram-Schmidt orthonormalization of
    ``(x', x'', x''', x'''')``. Curvatures are the frame components of the
    derivatives:

    * ``k1 = ||x''||``
    * ``k2 = <x''', B1> / (k1 <B1, B1>)``
    * ``k3 = <x'''', B2> / (k1 k2 <B2, B2>)``

    and ``B1``/``B2`` are flipped if needed so that ``k2, k3 > 0``. For a
    :class:`~slanthelix.curves.SampledCurve` whose fitting window is long
    against ``1 / max(k_i)`` the frame is recomputed from a narrower fit.

    Returns
    -------
    (FrenetFrame, CurvatureSample)

    Raises
    ------
    NotUnitSpeed
        ``|<x', x'> - 1|`` exceeds ``unit_speed_tol`` (curve default).
    DegenerateFrame
        A derivative is null or dependent, or a curvature is below
        ``curvature_tol``.
    """
    fr, k = _frame_from_derivatives(curve, s, tol, unit_speed_tol, curvature_tol)
    if isinstance(curve, SampledCurve):
        fine = curve.narrowed(max(k))
        if fine is not curve:
            fr, k = _frame_from_derivatives(fine, s, tol, unit_speed_tol, curvature_tol)
    return fr, k


def _frame_from_derivatives(curve, s, tol, unit_speed_tol, curvature_tol):
    if unit_speed_tol is None:
        unit_speed_tol = curve.unit_speed_tol
    d = curve.derivatives(s, 4)
    speed = inner(d[0], d[0])
    if abs(speed - 1.0) > unit_speed_tol:
        raise NotUnitSpeed(f"<x', x'> = {speed:.9g} at s={s}")
    k1 = pseudo_norm(d[1])
    if k1 <= curvature_tol:
        raise DegenerateFrame(f"k1 = {k1:.3g} at s={s}")
    try:
        res = gram_schmidt_indefinite(d, tol=tol)
    except (NullIntermediate, DependentBasis) as exc:
        raise DegenerateFrame(f"at s={s}: {exc}") from exc
    T, N, B1, B2 = res.vectors
    _, eps1, _, eps2 = res.signs
    k2 = inner(d[2], B1) / (k1 * res.signs[2])
    if k2 < 0:
        B1, k2 = -B1, -k2
    if k2 <= curvature_tol:
        raise DegenerateFrame(f"k2 = {k2:.3g} at s={s}")
    k3 = inner(d[3], B2) * eps2 / (k1 * k2)
    if k3 < 0:
        B2, k3 = -B2, -k3
    if k3 <= curvature_tol:
        raise DegenerateFrame(f"k3 = {k3:.3g} at s={s}")
    frame = FrenetFrame(T, N, B1, B2, int(eps1), int(eps2))
    return frame, CurvatureSample(float(k1), float(k2), float(k3))


@dataclass(frozen=True)
class FramedCurve:
    """Points and Frenet frames sampled along a curve.

    ``frames`` has shape ``(n, 4, 4)`` with rows ``T, N, B1, B2`` per sample;
    ``defects`` holds the orthonormality defect of each frame.
    """

    s_values: np.ndarray
    points: np.ndarray
    frames: np.ndarray
    eps1: int = 1
    eps2: int = 1
    defects: np.ndarray = field(default=None)

    def __post_init__(self):
        n = len(self.s_values)
        if self.points.shape != (n, 4) or self.frames.shape != (n, 4, 4):
            raise ValueError("s_values, points and frames must have matching lengths")
        if self.defects is None:
            target = gram_target(self.eps1, self.eps2)
            d = np.array([np.max(np.abs(gram(f) - target)) for f in self.frames])
            object.__setattr__(self, "defects", d)

    def __len__(self):
        return len(self.s_values)

    def frame(self, i) -> FrenetFrame:
        return FrenetFrame.from_matrix(self.frames[i], self.eps1, self.eps2)

    @property
    def T(self):
        return self.frames[:, 0]

    @property
    def N(self):
        return self.frames[:, 1]

    @property
    def B1(self):
        return self.frames[:, 2]

    @property
    def B2(self):
        return self.frames[:, 3]

    @property
    def max_defect(self) -> float:
        return float(np.max(self.defects))

    def as_sampled_curve(self, **kwargs) -> SampledCurve:
        return SampledCurve(self.s_values, self.points, **kwargs)

    def to_csv(self, path):
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(FRAME_COLUMNS)
            for s, p, f, d in zip(self.s_values, self.points, self.frames, self.defects):
                row = [s, *p, *f.ravel(), d]
                w.writerow([format_float(v) for v in row])


def load_framed_csv(path) -> FramedCurve:
    """Read a curve written by :meth:`FramedCurve.to_csv`.

    The signs are recovered from the Gram matrix of the first frame.
    """
    _, data = _read_rows(path, FRAME_COLUMNS)
    s = data[:, 0]
    frames = data[:, 5:21].reshape(-1, 4, 4)
    g = gram(frames[0])
    eps1, eps2 = int(np.sign(g[1, 1])), int(np.sign(g[3, 3]))
    return FramedCurve(s, data[:, 1:5], frames, eps1, eps2, data[:, 21])


def has_frame_columns(path) -> bool:
    with open(path, newline="", encoding="utf-8") as fh:
        header = next(csv.reader(fh), [])
    return [h.strip() for h in header] == FRAME_COLUMNS


def sample_frames(curve, grid, **kwargs):
    """Frames and curvatures of ``curve`` on ``grid``.

    Returns
    -------
    (FramedCurve, SampledProfile)

    Raises
    ------
    InconsistentSignature
        ``(eps1, eps2)`` is not the same at every grid point.
    """
    grid = np.asarray(grid, dtype=float)
    frames, ks = [], []
    for s in grid:
        fr, k = frame_at(curve, s, **kwargs)
        if frames and (fr.eps1, fr.eps2) != (frames[0].eps1, frames[0].eps2):
            raise InconsistentSignature(
                f"signs change from ({frames[0].eps1:+d}, {frames[0].eps2:+d}) to "
                f"({fr.eps1:+d}, {fr.eps2:+d}) at s={s}")
        frames.append(fr)
        ks.append(tuple(k))
    eps1, eps2 = frames[0].eps1, frames[0].eps2
    points = np.array([curve.evaluate(s) for s in grid])
    fc = FramedCurve(grid, points, np.array([f.matrix for f in frames]), eps1, eps2)
    k = np.array(ks)
    return fc, SampledProfile(grid, k[:, 0], k[:, 1], k[:, 2], eps1, eps2)


def curvature_profile(curve, grid, **kwargs) -> SampledProfile:
    """Sampled ``k1, k2, k3`` of ``curve`` on ``grid`` (see :func:`frame_at`)."""
    return sample_frames(curve, grid, **kwargs)[1]


def frame_curvatures(fc: FramedCurve) -> SampledProfile:
    """Curvatures of a framed curve read from differentiated frame fields.

    ``T', N', B1'`` are fourth-order finite differences along the samples and
    the curvatures are their frame components:
    ``k1 = eps1 <T', N>``, ``k2 = <N', B1> / <B1, B1>``, ``k3 = eps2 <B1', B2>``.
    """
    s = fc.s_values
    dT = sampled_derivative(s, fc.T)
    dN = sampled_derivative(s, fc.N)
    dB1 = sampled_derivative(s, fc.B1)
    e1, e2 = fc.eps1, fc.eps2
    k1 = e1 * inner(dT, fc.N)
    k2 = inner(dN, fc.B1) / (-e1 * e2)
    k3 = e2 * inner(dB1, fc.B2)
    return SampledProfile(s, k1, k2, k3, e1, e2)


def frenet_matrix(k1, k2, k3, eps1, eps2) -> np.ndarray:
    """Coefficients ``A`` of ``Y' = A Y`` for ``Y = (x, T, N, B1, B2)``."""
    A = np.zeros((5, 5))
    A[0, 1] = 1.0
    A[1, 2] = k1
    A[2, 1] = -eps1 * k1
    A[2, 3] = k2
    A[3, 2] = eps2 * k2
    A[3, 4] = k3
    A[4, 3] = eps1 * k3
    return A


def _coefficients(k1, k2, k3, eps1, eps2):
    k1, k2, k3 = (np.asarray(k, dtype=float) for k in (k1, k2, k3))
    return np.array([np.ones_like(k1), k1, -eps1 * k1, k2, eps2 * k2, k3, eps1 * k3])


def _rhs(c, Y):
    # sparse product frenet_matrix @ Y
    out = np.empty_like(Y)
    out[0] = Y[1]
    out[1] = c[1] * Y[2]
    out[2] = c[2] * Y[1] + c[3] * Y[3]
    out[3] = c[4] * Y[2] + c[5] * Y[4]
    out[4] = c[6] * Y[3]
    return out


def _step_matrices_dd(coef, h):
    """RK4 one-step propagators ``R_i`` (``Y_{i+1} = R_i Y_i``) as double-doubles.

    The system is linear, so each classical RK4 step is the matrix
    ``I + h/6 (K1 + 2 K2 + 2 K3 + K4)`` with ``K1 = A(s)``,
    ``K2 = A(s + h/2)(I + h/2 K1)``, ``K3 = A(s + h/2)(I + h/2 K2)``,
    ``K4 = A(s + h)(I + h K3)``. All steps are formed at once.
    """
    n = (coef.shape[1] - 1) // 2
    A = np.zeros((coef.shape[1], 5, 5))
    for (r, c), row in zip(((0, 1), (1, 2), (2, 1), (2, 3), (3, 2), (3, 4), (4, 3)), coef):
        A[:, r, c] = row
    Aa, Ab, Ad = A[0:-1:2], A[1::2], A[2::2]
    eye = dd.from_double(np.broadcast_to(np.eye(5), (n, 5, 5)))
    K1 = dd.from_double(Aa)
    K2 = dd.matmul(Ab, dd.add(eye, dd.scale(K1, 0.5 * h)))
    K3 = dd.matmul(Ab, dd.add(eye, dd.scale(K2, 0.5 * h)))
    K4 = dd.matmul(Ad, dd.add(eye, dd.scale(K3, h)))
    S = dd.add(dd.add(K1, K4), dd.scale(dd.add(K2, K3), 2.0))
    return dd.add(eye, dd.scale(S, h / 6.0))


def _sample_curvatures(profile, s):
    try:
        return [np.broadcast_to(np.asarray(k, dtype=float), s.shape) for k in profile.curvatures(s)]
    except (TypeError, ValueError):
        # curvature callables that only accept scalars
        return list(np.array([profile.curvatures(si) for si in s], dtype=float).T)


def integrate_frenet(profile, init_point=None, init_frame=None, s_range=None,
                     step=DEFAULT_RK_STEP, reorthonormalize_every=None,
                     precision="double") -> FramedCurve:
    """Synthesize a framed curve from curvatures with classical RK4.

    Parameters
    ----------
    profile : CurvatureProfile or SampledProfile
    init_point : array_like, optional
        ``x(s0)``; the origin by default.
    init_frame : FrenetFrame, optional
        Frame at ``s0``; :func:`canonical_frame` for the profile's signs by
        default. Its signs must match the profile's.
    s_range : (float, float), optional
        Defaults to ``profile.domain``.
    step : float
        Nominal step; shrunk so that a whole number of steps covers the range.
    reorthonormalize_every : int, optional
        Re-run Gram-Schmidt on the frame every that many steps. Off by
        default so that ``defects`` measures the integration error.
    precision : {"double", "double-double"}
        Arithmetic for the state. With a timelike leg the frame components
        grow like ``exp(rapidity)`` and float64 rounding alone then costs
        ``eps * |frame|**2`` in the defect; "double-double" carries ~32
        digits. Points and frames are returned rounded to float64, while
        ``defects`` is evaluated on the extended state.

    Raises
    ------
    SignatureViolation, InvalidInitialFrame
    """
    eps1, eps2 = profile.eps1, profile.eps2
    if not validate_signature(eps1, eps2):
        raise SignatureViolation("eps1 = -1 requires eps2 = +1")
    if precision not in ("double", "double-double"):
        raise ValueError(f"unknown precision {precision!r}")
    if init_frame is None:
        init_frame = canonical_frame(eps1, eps2)
    if (init_frame.eps1, init_frame.eps2) != (eps1, eps2):
        raise InvalidInitialFrame(
            f"frame signs ({init_frame.eps1:+d}, {init_frame.eps2:+d}) differ from "
            f"profile signs ({eps1:+d}, {eps2:+d})")
    defect0 = orthonormality_defect(init_frame)
    if not defect0 <= INITIAL_FRAME_TOL:
        raise InvalidInitialFrame(f"initial frame defect {defect0:.3g}")
    if init_point is None:
        init_point = np.zeros(4)
    if s_range is None:
        s_range = profile.domain
    if step <= 0:
        raise ValueError("step must be positive")
    s0, s1 = map(float, s_range)
    if s1 < s0:
        raise ValueError(f"bad range {s_range}")

    n = int(np.ceil((s1 - s0) / step - 1e-9)) if s1 > s0 else 0
    s_values = np.linspace(s0, s1, n + 1)
    h = (s1 - s0) / n if n else 0.0
    # curvatures at every node and half step, evaluated once
    nodes = np.empty(2 * n + 1)
    nodes[0::2] = s_values
    nodes[1::2] = s_values[:-1] + 0.5 * h
    coef = _coefficients(*_sample_curvatures(profile, nodes), eps1, eps2)

    Y0 = np.vstack([np.asarray(init_point, dtype=float), init_frame.matrix])
    out = np.empty((n + 1, 5, 4))
    out[0] = Y0
    out_lo = np.zeros_like(out)
    target = gram_target(eps1, eps2)
    if precision == "double":
        Y = Y0
        for i in range(n):
            ca, cb, cd = coef[:, 2 * i], coef[:, 2 * i + 1], coef[:, 2 * i + 2]
            a = _rhs(ca, Y)
            b = _rhs(cb, Y + 0.5 * h * a)
            c = _rhs(cb, Y + 0.5 * h * b)
            d = _rhs(cd, Y + h * c)
            Y = Y + (h / 6.0) * (a + 2.0 * b + 2.0 * c + d)
            if reorthonormalize_every and (i + 1) % reorthonormalize_every == 0:
                Y[1:] = gram_schmidt_indefinite(Y[1:], tol=0.0).vectors
            out[i + 1] = Y
        frames = out[:, 1:]
        defects = np.max(np.abs(np.einsum("nim,m,njm->nij", frames, METRIC, frames) - target),
                         axis=(1, 2))
    else:
        R = _step_matrices_dd(coef, h)
        Y = dd.from_double(Y0)
        for i in range(n):
            Y = dd.matmul_dd((R[0][i], R[1][i]), Y)
            if reorthonormalize_every and (i + 1) % reorthonormalize_every == 0:
                hi = Y[0].copy()
                hi[1:] = gram_schmidt_indefinite(hi[1:], tol=0.0).vectors
                Y = dd.from_double(hi)
            out[i + 1] = Y[0]
            out_lo[i + 1] = Y[1]
        defects = _gram_defects_dd(out[:, 1:], out_lo[:, 1:], target)
        out = out + out_lo
    return FramedCurve(s_values, out[:, 0].copy(), out[:, 1:].copy(), eps1, eps2, defects)


def _gram_defects_dd(hi, lo, target):
    """Per-sample Gram defect of frames stored as double-doubles ``(n, 4, 4)``."""
    p, e = dd.two_prod(hi[:, :, None, :], hi[:, None, :, :])
    e = e + hi[:, :, None, :] * lo[:, None, :, :] + lo[:, :, None, :] * hi[:, None, :, :]
    acc = (-p[..., 0], -e[..., 0])
    for m in range(1, 4):
        acc = dd.add(acc, (p[..., m], e[..., m]))
    acc = dd.add(acc, (-target, np.zeros_like(target)))
    return np.max(np.abs(acc[0] + acc[1]), axis=(1, 2))
