"""
Spacelike curves in Minkowski 4-space.

Two representations share one interface (``evaluate``, ``derivatives``,
``domain``):

* :class:`Curve` wraps a callable ``s -> x(s)``, with closed-form
  derivatives when available and central differences otherwise.
* :class:`SampledCurve` holds tabulated points and differentiates local
  polynomial fits.
"""

import csv
from dataclasses import dataclass

import numpy as np

from .errors import (
    NonMonotoneParameter,
    NotUnitSpeed,
    OutOfDomain,
    ParseError,
    StencilOutOfRange,
    TooFewSamples,
)
from .minkowski import inner
from .numdiff import stencil_derivatives, stencil_reach

DEFAULT_FD_STEP = 1e-3
ANALYTIC_UNIT_SPEED_TOL = 1e-6
SAMPLED_UNIT_SPEED_TOL = 1e-3
MIN_SAMPLES = 9
#: Largest ``max(k_i) * half-window`` a local fit may span before it is narrowed.
FIT_SCALE = 0.2
CURVE_COLUMNS = ("s", "x1", "x2", "x3", "x4")


class Curve:
    """A parametrized curve ``x(s)`` on a closed interval.

    Parameters
    ----------
    func : callable
        Maps a float ``s`` to a length-4 array.
    domain : (float, float)
        ``(s_min, s_max)``.
    derivatives : sequence of callables, optional
        Closed-form ``x', x'', x''', x''''``. When omitted the curve is
        differentiated numerically with step ``fd_step``.
    """

    def __init__(self, func, domain, derivatives=None, fd_step=DEFAULT_FD_STEP,
                 unit_speed_tol=ANALYTIC_UNIT_SPEED_TOL, name="curve"):
        s_min, s_max = map(float, domain)
        if not s_min <= s_max:
            raise ValueError(f"empty domain {domain}")
        if fd_step <= 0:
            raise ValueError("fd_step must be positive")
        self.func = func
        self.domain = (s_min, s_max)
        self.analytic = tuple(derivatives) if derivatives is not None else None
        self.fd_step = float(fd_step)
        self.unit_speed_tol = unit_speed_tol
        self.name = name

    @property
    def derivative_mode(self) -> str:
        return "analytic" if self.analytic else "finite_difference"

    def _check(self, s):
        if not self.domain[0] <= s <= self.domain[1]:
            raise OutOfDomain(f"s={s} outside {self.domain}")

    def evaluate(self, s) -> np.ndarray:
        self._check(s)
        return np.asarray(self.func(s), dtype=float)

    def derivatives(self, s, max_order=4) -> list:
        """``[x'(s), ..., x^(max_order)(s)]``."""
        if not 1 <= max_order <= 4:
            raise ValueError("max_order must be in 1..4")
        self._check(s)
        if self.analytic and len(self.analytic) >= max_order:
            return [np.asarray(d(s), dtype=float) for d in self.analytic[:max_order]]
        reach = stencil_reach(self.fd_step, max_order)
        if s - reach < self.domain[0] or s + reach > self.domain[1]:
            raise StencilOutOfRange(
                f"stencil [{s - reach:.6g}, {s + reach:.6g}] leaves domain {self.domain}")
        return stencil_derivatives(self.func, s, max_order, self.fd_step)

    def __repr__(self):
        return f"Curve({self.name}, domain={self.domain}, mode={self.derivative_mode})"


class SampledCurve:
    """Tabulated curve ``(s_i, x_i)``.

    Derivatives at ``s`` come from a least-squares polynomial of degree
    ``degree`` fitted to the ``window`` samples nearest ``s``; the same
    central stencils as :class:`Curve` are then applied to that polynomial.

    A wide window averages out rounding in the samples but cannot follow
    features shorter than itself; :meth:`narrowed` gives the same samples
    with a window matched to a curvature scale.
    """

    def __init__(self, s_values, points, window=41, degree=6, fd_step=DEFAULT_FD_STEP,
                 unit_speed_tol=SAMPLED_UNIT_SPEED_TOL, name="sampled"):
        s_values = np.asarray(s_values, dtype=float)
        points = np.asarray(points, dtype=float)
        if s_values.ndim != 1 or points.shape != (s_values.size, 4):
            raise ValueError(f"shape mismatch: s {s_values.shape}, points {points.shape}")
        if not (np.all(np.isfinite(s_values)) and np.all(np.isfinite(points))):
            raise ValueError("samples must be finite")
        if np.any(np.diff(s_values) <= 0):
            raise NonMonotoneParameter("s values must be strictly increasing")
        if s_values.size < MIN_SAMPLES:
            raise TooFewSamples(f"{s_values.size} samples, need at least {MIN_SAMPLES}")
        self.s_values = s_values
        self.points = points
        self.window = min(int(window), s_values.size)
        self.degree = min(int(degree), self.window - 1)
        self.fd_step = float(fd_step)
        self.unit_speed_tol = unit_speed_tol
        self.name = name
        self.domain = (float(s_values[0]), float(s_values[-1]))

    derivative_mode = "finite_difference"

    def __len__(self):
        return self.s_values.size

    def _check(self, s):
        if not self.domain[0] <= s <= self.domain[1]:
            raise OutOfDomain(f"s={s} outside {self.domain}")

    def local_fit(self, s):
        """Return ``(poly, center_point)`` where ``x(s') ~ center + poly(s')``."""
        n = self.s_values.size
        i = int(np.clip(np.searchsorted(self.s_values, s), 0, n - 1))
        lo = min(max(i - self.window // 2, 0), n - self.window)
        sl = slice(lo, lo + self.window)
        s_win = self.s_values[sl]
        c = lo + self.window // 2
        s_c = self.s_values[c]
        half = max(s_c - s_win[0], s_win[-1] - s_c)
        V = np.vander((s_win - s_c) / half, self.degree + 1, increasing=True)
        coef, *_ = np.linalg.lstsq(V, self.points[sl] - self.points[c], rcond=None)

        def poly(x):
            t = (np.asarray(x, dtype=float) - s_c) / half
            return np.vander(np.atleast_1d(t), self.degree + 1, increasing=True) @ coef

        return (lambda x: poly(x)[0]), self.points[c]

    def evaluate(self, s) -> np.ndarray:
        self._check(s)
        j = np.searchsorted(self.s_values, s)
        if j < self.s_values.size and self.s_values[j] == s:
            return self.points[j].copy()
        poly, center = self.local_fit(s)
        return center + poly(s)

    def narrowed(self, curvature) -> "SampledCurve":
        """Same samples with a window short against the length scale ``1/curvature``.

        Returns ``self`` when the current window already spans less than
        ``FIT_SCALE / curvature`` on each side; otherwise a copy whose
        window does (but never fewer than ``2 * degree + 1`` samples).
        """
        ds = (self.domain[1] - self.domain[0]) / (len(self) - 1)
        if curvature * (self.window // 2) * ds <= FIT_SCALE:
            return self
        window = max(2 * self.degree + 1, int(2 * FIT_SCALE / (curvature * ds)) | 1)
        if window >= self.window:
            return self
        cache = self.__dict__.setdefault("_narrowed", {})
        if window not in cache:
            cache[window] = SampledCurve(self.s_values, self.points, window, self.degree,
                                         self.fd_step, self.unit_speed_tol, self.name)
        return cache[window]

    def interior_samples(self, max_samples=100) -> np.ndarray:
        """Sample parameters whose fitting window is centred, thinned to ``max_samples``.

        Fits within half a window of either end are one-sided and their
        higher derivatives are markedly less accurate, so analyses that
        differentiate the recovered curvatures again should use these.
        """
        n = len(self)
        trim = min(self.window // 2, max(0, (n - MIN_SAMPLES) // 2))
        inner_s = self.s_values[trim:n - trim]
        stride = max(1, -(-inner_s.size // max_samples))
        return inner_s[::stride]

    def derivatives(self, s, max_order=4) -> list:
        if not 1 <= max_order <= 4:
            raise ValueError("max_order must be in 1..4")
        self._check(s)
        poly, _ = self.local_fit(s)
        return stencil_derivatives(poly, s, max_order, self.fd_step)

    def __repr__(self):
        return f"SampledCurve({self.name}, n={len(self)}, domain={self.domain})"


def evaluate(curve, s) -> np.ndarray:
    return curve.evaluate(s)


def derivatives(curve, s, max_order=4) -> list:
    return curve.derivatives(s, max_order)


@dataclass(frozen=True)
class UnitSpeedReport:
    max_deviation: float
    passed: bool

    def __bool__(self):
        return self.passed


def check_unit_speed(curve, grid, tol=None) -> UnitSpeedReport:
    """Max of ``|<x', x'> - 1|`` over ``grid``; passes when ``<= tol``."""
    if tol is None:
        tol = curve.unit_speed_tol
    dev = max(abs(inner(d, d) - 1.0) for d in (curve.derivatives(s, 1)[0] for s in grid))
    return UnitSpeedReport(float(dev), bool(dev <= tol))


def hyperbolic_circular(a=1.0, b=np.sqrt(2.0), domain=(-10.0, 10.0)) -> Curve:
    """``x(s) = (a sinh s, a cosh s, b cos s, b sin s)``; unit speed iff ``b^2 - a^2 = 1``."""
    if abs(b * b - a * a - 1.0) > ANALYTIC_UNIT_SPEED_TOL:
        raise NotUnitSpeed(f"b^2 - a^2 = {b * b - a * a:.6g}, need 1")

    def hyp(s, k):
        # k-th derivative of (a sinh, a cosh, b cos, b sin)
        sh, ch = (a * np.sinh(s), a * np.cosh(s)) if k % 2 == 0 else (a * np.cosh(s), a * np.sinh(s))
        phase = s + k * np.pi / 2
        return np.array([sh, ch, b * np.cos(phase), b * np.sin(phase)])

    derivs = [lambda s, k=k: hyp(s, k) for k in range(1, 5)]
    return Curve(lambda s: hyp(s, 0), domain, derivatives=derivs,
                 name=f"hyperbolic_circular(a={a!r}, b={b!r})")


def line(point=(0.0, 0.0, 0.0, 0.0), direction=(0.0, 1.0, 0.0, 0.0), domain=(-10.0, 10.0)) -> Curve:
    """Straight line ``point + s * direction``."""
    p = np.asarray(point, dtype=float)
    d = np.asarray(direction, dtype=float)
    zero = np.zeros(4)
    derivs = [lambda s: d.copy()] + [lambda s: zero.copy()] * 3
    return Curve(lambda s: p + s * d, domain, derivatives=derivs, name="line")


def builtin_family(name, **params):
    """Look up a built-in curve family by name.

    ``hyperbolic_circular`` and ``line`` return :class:`Curve`;
    ``from_profile`` takes a :class:`~slanthelix.generator.SlantSpec` as
    ``spec`` and returns the synthesized curve as a :class:`SampledCurve`.
    """
    if name == "hyperbolic_circular":
        return hyperbolic_circular(**params)
    if name == "line":
        return line(**params)
    if name == "from_profile":
        from .generator import generate_slant_curve

        framed, _ = generate_slant_curve(params.pop("spec"), **params)
        return framed.as_sampled_curve()
    raise KeyError(f"unknown curve family {name!r}")


def _read_rows(path, columns):
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None:
                raise ParseError(f"{path}: empty file")
            header = [h.strip() for h in header]
            if tuple(header[:len(columns)]) != tuple(columns):
                raise ParseError(f"{path}: header must start with {','.join(columns)}")
            rows = []
            for lineno, row in enumerate(reader, start=2):
                if not row or all(not c.strip() for c in row):
                    continue
                if len(row) != len(header):
                    raise ParseError(f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}")
                try:
                    rows.append([float(c) for c in row])
                except ValueError:
                    raise ParseError(f"{path}:{lineno}: not a number") from None
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not UTF-8 ({exc})") from None
    data = np.array(rows, dtype=float).reshape(len(rows), len(header))
    if not np.all(np.isfinite(data)):
        raise ParseError(f"{path}: non-finite value")
    return header, data


def load_curve_csv(path, **kwargs) -> SampledCurve:
    """Read ``s,x1,x2,x3,x4`` samples (extra trailing columns are ignored)."""
    _, data = _read_rows(path, CURVE_COLUMNS)
    s = data[:, 0]
    if np.any(np.diff(s) <= 0):
        raise NonMonotoneParameter(f"{path}: s must be strictly increasing")
    if s.size < MIN_SAMPLES:
        raise TooFewSamples(f"{path}: {s.size} samples, need at least {MIN_SAMPLES}")
    kwargs.setdefault("name", str(path))
    return SampledCurve(s, data[:, 1:5], **kwargs)


def format_float(x) -> str:
    return repr(float(x))


def save_curve_csv(path, s_values, points):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CURVE_COLUMNS)
        for s, p in zip(s_values, points):
            w.writerow([format_float(s)] + [format_float(v) for v in p])
