"""
Quaternion scalars.

Quaternions are stored as the last axis of float arrays, ``(..., 4)`` in the
order ``w + x i + y j + z k``.  The :class:`Quaternion` class wraps a single
scalar for readable call sites; the array functions broadcast.
"""

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Union

import numpy as np

from ..utils.errors import DomainError, ShapeError

ArrayLike = Union["Quaternion", Sequence[float], np.ndarray]


def as_qarray(value: ArrayLike) -> np.ndarray:
    """Coerce a Quaternion, a length-4 sequence or an array to a float array."""
    if isinstance(value, Quaternion):
        return value.as_array()
    arr = np.asarray(value, dtype=float)
    if arr.shape[-1:] != (4,):
        raise ShapeError(f"Quaternion arrays need a trailing axis of length 4, got {arr.shape}")
    return arr


def qmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product, broadcast over leading axes."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    w0, x0, y0, z0 = np.moveaxis(a, -1, 0)
    w1, x1, y1, z1 = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            w0 * w1 - x0 * x1 - y0 * y1 - z0 * z1,
            w0 * x1 + x0 * w1 + y0 * z1 - z0 * y1,
            w0 * y1 - x0 * z1 + y0 * w1 + z0 * x1,
            w0 * z1 + x0 * y1 - y0 * x1 + z0 * w1,
        ],
        axis=-1,
    )


def qconj(a: np.ndarray) -> np.ndarray:
    """Quaternionic conjugate."""
    out = np.array(a, dtype=float, copy=True)
    out[..., 1:] *= -1.0
    return out


def qre(a: np.ndarray) -> np.ndarray:
    """Real part."""
    return np.asarray(a, dtype=float)[..., 0]


def qim(a: np.ndarray) -> np.ndarray:
    """Imaginary part, still as a quaternion array."""
    out = np.array(a, dtype=float, copy=True)
    out[..., 0] = 0.0
    return out


def qabs2(a: np.ndarray) -> np.ndarray:
    """Squared modulus."""
    return np.sum(np.asarray(a, dtype=float) ** 2, axis=-1)


def qinv(a: np.ndarray) -> np.ndarray:
    """Multiplicative inverse; zero has none."""
    norm2 = qabs2(a)
    if np.any(norm2 == 0.0):
        raise DomainError("The zero quaternion has no inverse")
    return qconj(a) / norm2[..., None]


@dataclass(frozen=True)
class Quaternion:
    """A single quaternion w + xi + yj + zk."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, arr: ArrayLike) -> "Quaternion":
        w, x, y, z = (float(c) for c in as_qarray(arr).reshape(4))
        return cls(w, x, y, z)

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=float)

    def to_list(self) -> List[float]:
        return [self.w, self.x, self.y, self.z]

    def __iter__(self) -> Iterator[float]:
        return iter(self.to_list())

    def __repr__(self) -> str:
        return f"Quaternion({self.w!r} + {self.x!r} i + {self.y!r} j + {self.z!r} k)"

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion.from_array(self.as_array() + as_qarray(other))

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion.from_array(self.as_array() - as_qarray(other))

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other: Union["Quaternion", float]) -> "Quaternion":
        if isinstance(other, (int, float, np.floating)):
            return Quaternion.from_array(self.as_array() * float(other))
        return Quaternion.from_array(qmul(self.as_array(), as_qarray(other)))

    def __rmul__(self, other: float) -> "Quaternion":
        return Quaternion.from_array(self.as_array() * float(other))

    def __truediv__(self, other: float) -> "Quaternion":
        return Quaternion.from_array(self.as_array() / float(other))

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    @property
    def re(self) -> float:
        return self.w

    def im(self) -> "Quaternion":
        return Quaternion(0.0, self.x, self.y, self.z)

    def norm(self) -> float:
        return float(np.sqrt(qabs2(self.as_array())))

    def inverse(self) -> "Quaternion":
        return Quaternion.from_array(qinv(self.as_array()))

    def isclose(self, other: ArrayLike, tol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.as_array() - as_qarray(other))) <= tol)


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
UNIT_I = Quaternion(0.0, 1.0, 0.0, 0.0)
UNIT_J = Quaternion(0.0, 0.0, 1.0, 0.0)
UNIT_K = Quaternion(0.0, 0.0, 0.0, 1.0)

# 1, i, j, k as rows
QBASIS = np.eye(4)
IMAGINARY_UNITS = QBASIS[1:]
