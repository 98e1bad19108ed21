"""
Linear algebra in Minkowski 4-space.

Vectors are plain ``numpy`` arrays of shape ``(4,)`` holding the coordinates
``(x1, x2, x3, x4)``; the metric is ``-dx1^2 + dx2^2 + dx3^2 + dx4^2``, so the
first coordinate is the time-like one.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DependentBasis, NullIntermediate, NullVector

#: Absolute tolerance on inner products used to decide "null".
NULL_TOL = 1e-10

#: Diagonal of the metric tensor.
METRIC = np.array([-1.0, 1.0, 1.0, 1.0])


class CausalCharacter(Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"

    def __str__(self):
        return self.value


def vec4(*components) -> np.ndarray:
    """Build a finite 4-vector from four numbers or one array-like."""
    if len(components) == 1:
        v = np.asarray(components[0], dtype=float)
    else:
        v = np.asarray(components, dtype=float)
    if v.shape != (4,):
        raise ValueError(f"expected 4 components, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector components must be finite")
    return v


def inner(u, v):
    """Minkowski inner product ``-u1 v1 + u2 v2 + u3 v3 + u4 v4``.

    Works on the last axis, so stacks of vectors broadcast.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return np.sum(METRIC * u * v, axis=-1)


def gram(vectors) -> np.ndarray:
    """Matrix of pairwise inner products of the rows of ``vectors``."""
    a = np.asarray(vectors, dtype=float)
    return (a * METRIC) @ a.T


def pseudo_norm(v) -> float:
    """``sqrt(|<v, v>|)``; zero for null and zero vectors."""
    return np.sqrt(np.abs(inner(v, v)))


def causal_character(v, tol: float = NULL_TOL) -> CausalCharacter:
    """Classify ``v`` as spacelike, timelike or lightlike.

    The zero vector counts as spacelike. ``tol`` separates zero from nonzero
    both for the inner product and for the components.
    """
    v = np.asarray(v, dtype=float)
    q = inner(v, v)
    if q > tol or np.all(np.abs(v) <= tol):
        return CausalCharacter.SPACELIKE
    if q < -tol:
        return CausalCharacter.TIMELIKE
    return CausalCharacter.LIGHTLIKE


def normalize(v, tol: float = NULL_TOL) -> np.ndarray:
    """Scale ``v`` so that ``<v, v> = +-1``.

    Raises
    ------
    NullVector
        If ``v`` is null or zero.
    """
    v = np.asarray(v, dtype=float)
    n = pseudo_norm(v)
    if n <= tol:
        raise NullVector(f"cannot normalize vector with pseudo-norm {n:.3g}")
    return v / n


@dataclass(frozen=True)
class OrthonormalResult:
    """Output of :func:`gram_schmidt_indefinite`.

    ``vectors`` is a ``(4, 4)`` array whose rows are the orthonormal vectors
    and ``signs[i] = <e_i, e_i>``.
    """

    vectors: np.ndarray
    signs: tuple

    def __iter__(self):
        return iter(self.vectors)

    def defect(self) -> float:
        target = np.diag(np.asarray(self.signs, dtype=float))
        return float(np.max(np.abs(gram(self.vectors) - target)))


def gram_schmidt_indefinite(basis, tol: float = NULL_TOL) -> OrthonormalResult:
    """Orthonormalize four vectors with respect to the Minkowski metric.

    Classical Gram-Schmidt applied twice per vector. The projection onto a
    previous unit vector ``e_i`` uses ``s_i <v, e_i> e_i`` with
    ``s_i = <e_i, e_i> = +-1``.

    Parameters
    ----------
    basis : array_like, shape (4, 4)
        Rows are the input vectors, in order.
    tol : float
        Inner products with magnitude below ``tol`` are treated as zero.

    Returns
    -------
    OrthonormalResult

    Raises
    ------
    DependentBasis
        An orthogonalized vector is (numerically) zero.
    NullIntermediate
        An orthogonalized vector is null but nonzero.
    """
    basis = np.asarray(basis, dtype=float)
    if basis.shape != (4, 4):
        raise ValueError(f"expected 4 vectors of length 4, got {basis.shape}")

    out = np.zeros((4, 4))
    signs = []
    for k in range(4):
        w = basis[k].copy()
        scale = max(np.max(np.abs(w)), 1.0)
        for _ in range(2):
            for i in range(k):
                w -= signs[i] * inner(w, out[i]) * out[i]
        if np.max(np.abs(w)) <= tol * scale:
            raise DependentBasis(f"vector {k} is dependent on its predecessors")
        q = inner(w, w)
        if abs(q) <= tol * scale**2:
            raise NullIntermediate(f"orthogonalized vector {k} is null")
        sign = 1 if q > 0 else -1
        out[k] = w / np.sqrt(abs(q))
        signs.append(sign)
    return OrthonormalResult(out, tuple(signs))
