"""Exception types raised by slanthelix."""


class GeometryError(ValueError):
    """Base class for every domain error raised by the package."""


class NullVector(GeometryError):
    """Normalization of a null (lightlike) or zero vector was requested."""


class NullIntermediate(GeometryError):
    """An orthogonalized vector became null during indefinite Gram-Schmidt."""


class DependentBasis(GeometryError):
    """An orthogonalized vector vanished: the input vectors are dependent."""


class OutOfDomain(GeometryError):
    pass


class StencilOutOfRange(GeometryError):
    """A finite-difference stencil would sample outside the curve domain."""


class ParseError(GeometryError):
    pass


class NonMonotoneParameter(GeometryError):
    pass


class TooFewSamples(GeometryError):
    pass


class DegenerateFrame(GeometryError):
    """The Frenet frame cannot be built (null or dependent derivatives)."""


class NotUnitSpeed(GeometryError):
    pass


class InconsistentSignature(GeometryError):
    """The signs (eps1, eps2) change along the curve."""


class InvalidInitialFrame(GeometryError):
    pass


class SignatureViolation(GeometryError):
    """(eps1, eps2) = (-1, -1), which the Frenet signature rule forbids."""


class NonPositiveCurvature(GeometryError):
    """A curvature sample is zero or negative."""


class NonPositiveK3(NonPositiveCurvature):
    """The generated ratio k3/k2 is not positive on the whole range."""


class NotSlant(GeometryError):
    pass
