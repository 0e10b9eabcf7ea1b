"""
Tangent vectors of G2(C^{n+2}) and their embedding into m.

m1 is the set of n x 2 quaternion matrices with entries in R + Ri.
"""

from typing import Optional

import numpy as np

from ..config.manager import resolve_tol
from ..lts.subspace import RealSubspace
from ..model.tangent import TangentVector
from ..utils.errors import DomainError, ShapeError


class CTangentVector:
    """An n x 2 complex matrix, a linear map C^2 -> C^n."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: np.ndarray):
        arr = np.array(matrix, dtype=complex)
        if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 2:
            raise ShapeError(f"CTangentVector needs shape (n, 2) with n >= 2, got {arr.shape}")
        arr.setflags(write=False)
        self.matrix = arr

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_tangent(cls, v: TangentVector, tol: Optional[float] = None) -> "CTangentVector":
        """
        The complex matrix of a tangent vector in m1.

        Raises:
            DomainError: if v has j or k components
        """
        defect = float(np.max(np.abs(v.matrix[..., 2:])))
        if defect > resolve_tol(tol):
            raise DomainError(f"Tangent vector is not in m1 (j, k part {defect:.3e})")
        return cls(v.matrix[..., 0] + 1j * v.matrix[..., 1])

    def to_tangent(self) -> TangentVector:
        out = np.zeros(self.matrix.shape + (4,))
        out[..., 0] = self.matrix.real
        out[..., 1] = self.matrix.imag
        return TangentVector(out)

    def __add__(self, other: "CTangentVector") -> "CTangentVector":
        return CTangentVector(self.matrix + other.matrix)

    def __sub__(self, other: "CTangentVector") -> "CTangentVector":
        return CTangentVector(self.matrix - other.matrix)

    def __mul__(self, scalar: complex) -> "CTangentVector":
        return CTangentVector(self.matrix * scalar)

    __rmul__ = __mul__

    def norm(self) -> float:
        return float(np.linalg.norm(self.matrix))

    def __repr__(self) -> str:
        return f"CTangentVector(n={self.n})"


def c_curvature(u: CTangentVector, v: CTangentVector, w: CTangentVector) -> CTangentVector:
    """R(u, v) w = (u v* - v u*) w + w (v* u - u* v) with complex adjoints."""
    if not u.n == v.n == w.n:
        raise ShapeError(f"Curvature operands live over different n: {u.n}, {v.n}, {w.n}")
    a, b, c = u.matrix, v.matrix, w.matrix
    ah, bh = a.conj().T, b.conj().T
    return CTangentVector((a @ bh - b @ ah) @ c + c @ (bh @ a - ah @ b))


def m1_subspace(n: int) -> RealSubspace:
    """m1: the tangent vectors with complex entries, real dimension 4n."""
    vectors = []
    for row in range(n):
        for col in range(2):
            for unit in (1.0, 1j):
                z = np.zeros((n, 2), dtype=complex)
                z[row, col] = unit
                vectors.append(CTangentVector(z).to_tangent())
    return RealSubspace.from_vectors(vectors, n)


def m1_defect(subspace: RealSubspace) -> float:
    """Largest j, k component of the basis of a subspace."""
    return float(np.max(np.abs(subspace.basis[..., 2:]), initial=0.0))


def ensure_in_m1(subspace: RealSubspace, tol: Optional[float] = None) -> None:
    """
    Raises:
        DomainError: if the subspace is not contained in m1
    """
    defect = m1_defect(subspace)
    if defect > resolve_tol(tol):
        raise DomainError(f"Subspace is not contained in m1 (defect {defect:.3e})")
