"""
Real subspaces of the tangent space m, stored by an R-orthonormal basis.
"""

from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence

import numpy as np

from ..config.manager import resolve_tol
from ..model.tangent import TangentVector
from ..utils.errors import ShapeError, ValidationError


def orthonormal_rows(rows: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """
    In-order modified Gram-Schmidt on the rows of a real matrix.

    Rows whose residual after projection is at most ``tol`` times the largest
    input norm are dropped.

    Args:
        rows: ``(k, N)`` real matrix
        tol: Relative drop threshold

    Returns:
        ``(d, N)`` matrix with orthonormal rows, d <= k
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    if rows.shape[0] == 0:
        return rows.reshape(0, rows.shape[-1])
    scale = max(1.0, float(np.max(np.linalg.norm(rows, axis=1))))
    kept: List[np.ndarray] = []
    for row in rows:
        v = row.copy()
        for _ in range(2):
            for u in kept:
                v -= np.dot(u, v) * u
        norm = float(np.linalg.norm(v))
        if norm > tol * scale:
            kept.append(v / norm)
    if not kept:
        return np.zeros((0, rows.shape[1]))
    return np.array(kept)


class RealSubspace:
    """An R-subspace of m = L(V', V) with an orthonormal basis."""

    def __init__(self, n: int, basis: np.ndarray, tol: float = 1e-10):
        arr = np.array(basis, dtype=float).reshape(-1, n, 2, 4)
        flat = arr.reshape(arr.shape[0], 8 * n)
        defect = float(np.max(np.abs(flat @ flat.T - np.eye(flat.shape[0])), initial=0.0))
        if defect > tol:
            raise ValidationError(f"RealSubspace basis is not orthonormal (defect {defect:.3e})")
        arr.setflags(write=False)
        self.n = n
        self.basis = arr

    @classmethod
    def from_vectors(
        cls, vectors: Iterable[TangentVector], n: Optional[int] = None, tol: Optional[float] = None
    ) -> "RealSubspace":
        """Span of arbitrary tangent vectors, orthonormalized in order."""
        vectors = list(vectors)
        if n is None:
            if not vectors:
                raise ShapeError("Cannot infer n from an empty vector list")
            n = vectors[0].n
        if any(v.n != n for v in vectors):
            raise ShapeError(f"All vectors must live over n={n}")
        rows = np.array([v.flat for v in vectors]) if vectors else np.zeros((0, 8 * n))
        return cls(n, orthonormal_rows(rows, resolve_tol(tol)))

    @classmethod
    def from_flat(cls, rows: np.ndarray, n: int, tol: Optional[float] = None) -> "RealSubspace":
        return cls(n, orthonormal_rows(np.asarray(rows).reshape(-1, 8 * n), resolve_tol(tol)))

    @classmethod
    def full(cls, n: int) -> "RealSubspace":
        """All of m."""
        return cls(n, np.eye(8 * n))

    @classmethod
    def zero(cls, n: int) -> "RealSubspace":
        return cls(n, np.zeros((0, 8 * n)))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def flat(self) -> np.ndarray:
        """Basis as rows of a ``(dim, 8n)`` matrix."""
        return self.basis.reshape(self.dim, 8 * self.n)

    def vectors(self) -> List[TangentVector]:
        return [TangentVector(b) for b in self.basis]

    def vector(self, coefficients: Sequence[float]) -> TangentVector:
        """Linear combination of the basis."""
        coefficients = np.asarray(coefficients, dtype=float)
        return TangentVector.from_flat(coefficients @ self.flat, self.n)

    def projector(self) -> np.ndarray:
        return self.flat.T @ self.flat

    def orthoproject(self, v: TangentVector) -> TangentVector:
        """Orthogonal projection of ``v`` onto the subspace."""
        self._check_n(v.n)
        return TangentVector.from_flat(self.flat.T @ (self.flat @ v.flat), self.n)

    def residual(self, v: TangentVector) -> float:
        """Distance of ``v`` from the subspace."""
        return (v - self.orthoproject(v)).norm()

    def contains_vector(self, v: TangentVector, tol: Optional[float] = None) -> bool:
        return self.residual(v) <= resolve_tol(tol) * max(1.0, v.norm())

    def contains(self, other: "RealSubspace", tol: Optional[float] = None) -> bool:
        """Whether ``other`` is a subspace of ``self``."""
        self._check_n(other.n)
        if other.dim == 0:
            return True
        rest = other.flat - (other.flat @ self.flat.T) @ self.flat
        return float(np.max(np.linalg.norm(rest, axis=1))) <= resolve_tol(tol)

    def equal(self, other: "RealSubspace", tol: Optional[float] = None) -> bool:
        return self.dim == other.dim and self.contains(other, tol)

    def orthocomplement_in(self, ambient: "RealSubspace", tol: Optional[float] = None) -> "RealSubspace":
        """The orthogonal complement of ``self`` inside ``ambient``."""
        self._check_n(ambient.n)
        rows = ambient.flat - (ambient.flat @ self.flat.T) @ self.flat
        return RealSubspace.from_flat(rows, self.n, tol)

    def sum(self, other: "RealSubspace", tol: Optional[float] = None) -> "RealSubspace":
        self._check_n(other.n)
        return RealSubspace.from_flat(np.vstack([self.flat, other.flat]), self.n, tol)

    def transformed(self, func: Callable[[TangentVector], TangentVector]) -> "RealSubspace":
        """Image under a linear map of tangent vectors."""
        return RealSubspace.from_vectors([func(v) for v in self.vectors()], self.n)

    def _check_n(self, n: int) -> None:
        if n != self.n:
            raise ShapeError(f"Subspace lives over n={self.n}, got n={n}")

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "basis": [v.to_dict() for v in self.vectors()]}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], tol: Optional[float] = None) -> "RealSubspace":
        n = int(data["n"])
        vectors = [TangentVector.from_dict(item) for item in data["basis"]]
        return cls.from_vectors(vectors, n, tol)

    def __repr__(self) -> str:
        return f"RealSubspace(n={self.n}, dim={self.dim})"
