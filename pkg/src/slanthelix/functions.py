"""
Scalar functions of arclength that know their first two derivatives.

Curvature profiles are built from these so that ratios such as ``k3/k2`` can
be differentiated by the chain rule instead of by finite differences.
"""

import numpy as np

from .numdiff import stencil_derivatives

MAX_ORDER = 2


class SmoothFunction:
    """Base class: ``fn(s, order)`` returns the ``order``-th derivative."""

    def __call__(self, s, order=0):
        raise NotImplementedError

    def spec(self) -> str:
        return repr(self)


class Const(SmoothFunction):
    def __init__(self, value):
        self.value = float(value)

    def __call__(self, s, order=0):
        s = np.asarray(s, dtype=float)
        v = self.value if order == 0 else 0.0
        return v + 0.0 * s

    def spec(self):
        return f"const:{self.value!r}"

    def __repr__(self):
        return f"Const({self.value!r})"


class Linear(SmoothFunction):
    """``a + b*s``."""

    def __init__(self, a, b):
        self.a = float(a)
        self.b = float(b)

    def __call__(self, s, order=0):
        s = np.asarray(s, dtype=float)
        if order == 0:
            return self.a + self.b * s
        if order == 1:
            return self.b + 0.0 * s
        return 0.0 * s

    def spec(self):
        return f"linear:{self.a!r},{self.b!r}"

    def __repr__(self):
        return f"Linear({self.a!r}, {self.b!r})"


class Func(SmoothFunction):
    """Wrap a callable and, optionally, its derivatives.

    Missing derivatives are estimated with central differences of step ``h``.
    """

    def __init__(self, f, derivatives=(), h=1e-3):
        self.f = f
        self.derivatives = tuple(derivatives)
        self.h = h

    def __call__(self, s, order=0):
        if order == 0:
            return self.f(s)
        if order <= len(self.derivatives):
            return self.derivatives[order - 1](s)
        s_arr = np.asarray(s, dtype=float)
        vals = [stencil_derivatives(self.f, si, order, self.h)[order - 1]
                for si in np.atleast_1d(s_arr)]
        return np.reshape(np.asarray(vals, dtype=float), s_arr.shape)


class Product(SmoothFunction):
    """Pointwise product, differentiated with the Leibniz rule."""

    def __init__(self, u, v):
        self.u = u
        self.v = v

    def __call__(self, s, order=0):
        u, v = self.u, self.v
        if order == 0:
            return u(s) * v(s)
        if order == 1:
            return u(s, 1) * v(s) + u(s) * v(s, 1)
        if order == 2:
            return u(s, 2) * v(s) + 2 * u(s, 1) * v(s, 1) + u(s) * v(s, 2)
        raise ValueError(f"derivative order {order} > {MAX_ORDER}")


def as_function(obj) -> SmoothFunction:
    """Coerce a number, callable or :class:`SmoothFunction`."""
    if isinstance(obj, SmoothFunction):
        return obj
    if callable(obj):
        return Func(obj)
    return Const(obj)


def parse_function_spec(text: str) -> SmoothFunction:
    """Parse ``const:<v>`` or ``linear:<a>,<b>`` (value ``a + b*s``)."""
    kind, sep, args = text.strip().partition(":")
    if not sep:
        raise ValueError(f"bad function spec {text!r}; expected const:<v> or linear:<a>,<b>")
    try:
        values = [float(a) for a in args.split(",")]
    except ValueError:
        raise ValueError(f"bad number in function spec {text!r}") from None
    if kind == "const" and len(values) == 1:
        return Const(values[0])
    if kind == "linear" and len(values) == 2:
        return Linear(*values)
    raise ValueError(f"bad function spec {text!r}; expected const:<v> or linear:<a>,<b>")
