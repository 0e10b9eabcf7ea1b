"""
Tangent vectors, isotropy elements and points of G2(V' + V).

A tangent vector at the origin V' is an H-linear map V' -> V stored as an
``(n, 2, 4)`` quaternion matrix whose columns are the images of e1 and e2.
"""

from dataclasses import dataclass
from typing import Any, Dict, Mapping, Optional, Tuple, Union

import numpy as np

from ..qlinalg.matrix import gram_schmidt_H, qadjoint, qeye, qmatmul
from ..qlinalg.quaternion import Quaternion, as_qarray, qmul
from ..utils.errors import ShapeError, ValidationError

Scalar = Union[int, float, np.floating]


class TangentVector:
    """An element of m = L(V', V) as an n x 2 quaternion matrix."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: np.ndarray):
        arr = np.array(matrix, dtype=float)
        if arr.ndim != 3 or arr.shape[1:] != (2, 4):
            raise ShapeError(f"TangentVector needs shape (n, 2, 4), got {arr.shape}")
        if arr.shape[0] < 2:
            raise ShapeError(f"TangentVector needs n >= 2, got n={arr.shape[0]}")
        arr.setflags(write=False)
        self.matrix = arr

    @classmethod
    def zeros(cls, n: int) -> "TangentVector":
        return cls(np.zeros((n, 2, 4)))

    @classmethod
    def from_entries(cls, n: int, entries: Mapping[Tuple[int, int], Any]) -> "TangentVector":
        """Build from a sparse ``{(row, col): quaternion}`` map (0-based)."""
        arr = np.zeros((n, 2, 4))
        for (row, col), q in entries.items():
            arr[row, col] = as_qarray(q)
        return cls(arr)

    @classmethod
    def from_flat(cls, flat: np.ndarray, n: int) -> "TangentVector":
        return cls(np.asarray(flat, dtype=float).reshape(n, 2, 4))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def flat(self) -> np.ndarray:
        return self.matrix.reshape(-1)

    def column(self, k: int) -> np.ndarray:
        """Image of e_{k+1} as a QVector."""
        return self.matrix[:, k, :]

    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.matrix ** 2)))

    def _check(self, other: "TangentVector") -> None:
        if self.matrix.shape != other.matrix.shape:
            raise ShapeError(f"n mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "TangentVector") -> "TangentVector":
        self._check(other)
        return TangentVector(self.matrix + other.matrix)

    def __sub__(self, other: "TangentVector") -> "TangentVector":
        self._check(other)
        return TangentVector(self.matrix - other.matrix)

    def __neg__(self) -> "TangentVector":
        return TangentVector(-self.matrix)

    def __mul__(self, scalar: Scalar) -> "TangentVector":
        return TangentVector(self.matrix * float(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "TangentVector":
        return TangentVector(self.matrix / float(scalar))

    def right(self, q: Union[Quaternion, np.ndarray]) -> "TangentVector":
        """Entrywise right multiplication ``v * q``."""
        return TangentVector(qmul(self.matrix, as_qarray(q)))

    def left(self, q: Union[Quaternion, np.ndarray]) -> "TangentVector":
        """Entrywise left multiplication ``q * v``."""
        return TangentVector(qmul(as_qarray(q), self.matrix))

    def compose(self, b: np.ndarray) -> "TangentVector":
        """Precompose with a 2x2 quaternion matrix: ``v o b``."""
        return TangentVector(qmatmul(self.matrix, b))

    def allclose(self, other: "TangentVector", tol: float = 1e-10) -> bool:
        self._check(other)
        return bool(np.max(np.abs(self.matrix - other.matrix), initial=0.0) <= tol)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "cols": [[list(map(float, q)) for q in self.column(k)] for k in range(2)],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "TangentVector":
        cols = np.asarray(data["cols"], dtype=float)
        if cols.ndim != 3 or cols.shape[0] != 2 or cols.shape[2] != 4:
            raise ShapeError(f"Malformed tangent vector columns of shape {cols.shape}")
        if int(data["n"]) != cols.shape[1]:
            raise ShapeError(f"Declared n={data['n']} but columns have length {cols.shape[1]}")
        return cls(np.transpose(cols, (1, 0, 2)))

    def __repr__(self) -> str:
        return f"TangentVector(n={self.n}, norm={self.norm():.6g})"


def _unitary_defect(b: np.ndarray) -> float:
    b = np.asarray(b, dtype=float)
    return float(np.max(np.abs(qmatmul(qadjoint(b), b) - qeye(b.shape[0]))))


def random_symplectic(n: int, rng: np.random.Generator) -> np.ndarray:
    """Element of Sp(n): Gram-Schmidt over H of a Gaussian quaternion matrix."""
    while True:
        columns = gram_schmidt_H(list(rng.standard_normal((n, n, 4))), 1e-6)
        if len(columns) == n:
            return np.stack(columns, axis=1)


@dataclass(frozen=True)
class IsotropyElement:
    """An element (B1, B2) of Sp(V') x Sp(V)."""

    b1: np.ndarray
    b2: np.ndarray
    tol: float = 1e-10

    def __post_init__(self):
        b1 = np.asarray(self.b1, dtype=float)
        b2 = np.asarray(self.b2, dtype=float)
        if b1.shape != (2, 2, 4) or b2.ndim != 3 or b2.shape[0] != b2.shape[1] or b2.shape[2] != 4:
            raise ShapeError(f"Isotropy blocks have shapes {b1.shape} and {b2.shape}")
        for name, block in (("B1", b1), ("B2", b2)):
            defect = _unitary_defect(block)
            if defect > self.tol:
                raise ValidationError(f"{name} is not symplectic (defect {defect:.3e})")
        object.__setattr__(self, "b1", b1)
        object.__setattr__(self, "b2", b2)

    @property
    def n(self) -> int:
        return self.b2.shape[0]

    @classmethod
    def identity(cls, n: int) -> "IsotropyElement":
        return cls(qeye(2), qeye(n))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "IsotropyElement":
        """Pseudorandom element from H-orthonormalized Gaussian matrices."""
        return cls(random_symplectic(2, rng), random_symplectic(n, rng))

    def inverse(self) -> "IsotropyElement":
        return IsotropyElement(qadjoint(self.b1), qadjoint(self.b2), self.tol)

    def compose(self, other: "IsotropyElement") -> "IsotropyElement":
        """``self o other``."""
        return IsotropyElement(qmatmul(self.b1, other.b1), qmatmul(self.b2, other.b2), self.tol)

    def ambient(self) -> np.ndarray:
        """Block-diagonal ``(n+2, n+2, 4)`` matrix acting on V' + V."""
        n = self.n
        out = np.zeros((n + 2, n + 2, 4))
        out[:2, :2] = self.b1
        out[2:, 2:] = self.b2
        return out


@dataclass(frozen=True)
class KElement:
    """An element (X1, X2) of sp(V') + sp(V)."""

    x1: np.ndarray
    x2: np.ndarray

    @property
    def n(self) -> int:
        return np.asarray(self.x2).shape[0]

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.asarray(self.x1) ** 2) + np.sum(np.asarray(self.x2) ** 2)))

    def is_skew(self, tol: float = 1e-10) -> bool:
        return all(
            np.max(np.abs(qadjoint(x) + np.asarray(x)), initial=0.0) <= tol for x in (self.x1, self.x2)
        )


@dataclass(frozen=True)
class Plane:
    """A point of G2(V' + V): two H-orthonormal columns of length n+2."""

    basis: np.ndarray
    tol: float = 1e-10

    def __post_init__(self):
        basis = np.asarray(self.basis, dtype=float)
        if basis.ndim != 3 or basis.shape[1:] != (2, 4):
            raise ShapeError(f"Plane basis needs shape (n+2, 2, 4), got {basis.shape}")
        defect = float(np.max(np.abs(qmatmul(qadjoint(basis), basis) - qeye(2))))
        if defect > self.tol:
            raise ValidationError(f"Plane basis is not H-orthonormal (defect {defect:.3e})")
        object.__setattr__(self, "basis", basis)

    @classmethod
    def origin(cls, n: int) -> "Plane":
        """The base point V' = span{e1, e2}."""
        basis = np.zeros((n + 2, 2, 4))
        basis[0, 0, 0] = 1.0
        basis[1, 1, 0] = 1.0
        return cls(basis)

    @classmethod
    def spanned_by(cls, columns: np.ndarray, tol: float = 1e-10) -> "Plane":
        """Plane with the given (already orthonormal) QVectors as columns."""
        return cls(np.stack([np.asarray(c, dtype=float) for c in columns], axis=1), tol)

    @property
    def n(self) -> int:
        return self.basis.shape[0] - 2

    def to_dict(self) -> Dict[str, Any]:
        return {"basis": [[list(map(float, q)) for q in self.basis[:, k]] for k in range(2)]}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], tol: Optional[float] = None) -> "Plane":
        cols = np.asarray(data["basis"], dtype=float)
        return cls(np.transpose(cols, (1, 0, 2)), 1e-10 if tol is None else tol)
