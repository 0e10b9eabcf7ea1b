"""
Detection of HP-types of real subspaces of a symplectic space.

A real subspace U of H^n is quaternionic (H, l), totally complex (C, l) with
respect to a unit imaginary quaternion, totally real (R, l), or a real
3-dimensional subspace of a quaternionic line (S3).
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from .matrix import rank_H, right_scale
from ..utils.errors import DegenerateInputError, DescriptorError

KINDS = ("R", "C", "H", "S3")
WIDTH = {"R": 1, "C": 2, "H": 4, "S3": 3}


@dataclass(frozen=True)
class HPType:
    """An HP-type: kind in R, C, H, S3 and the quaternionic-ish dimension ell."""

    kind: str
    ell: int = 1
    axis: Optional[Tuple[float, float, float]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DescriptorError(f"Unknown HP-type kind {self.kind!r}")
        if self.kind == "S3" and self.ell != 1:
            raise DescriptorError("The S3 type has dimension 1")
        if self.ell < 1:
            raise DescriptorError(f"HP-type dimension must be positive, got {self.ell}")

    @property
    def dim(self) -> int:
        return self.ell

    @property
    def width(self) -> int:
        return WIDTH[self.kind]

    @property
    def real_dim(self) -> int:
        return self.width * self.dim

    @property
    def is_cp_type(self) -> bool:
        return self.kind in ("R", "C")

    def field_units(self) -> np.ndarray:
        """Real basis of the scalars spanning one coordinate line, as ``(w, 4)``."""
        count = {"R": 1, "C": 2, "H": 4, "S3": 3}[self.kind]
        return np.eye(4)[:count]

    def __str__(self) -> str:
        return "S3" if self.kind == "S3" else f"{self.kind}{self.ell}"

    @classmethod
    def parse(cls, text: str) -> "HPType":
        text = text.strip()
        if text == "S3":
            return cls("S3", 1)
        if len(text) < 2 or text[0] not in "RCH" or not text[1:].isdigit():
            raise DescriptorError(f"Cannot parse HP-type {text!r}")
        return cls(text[0], int(text[1:]))


def _real_orthonormal(vectors: Sequence[np.ndarray], tol: float) -> np.ndarray:
    flat = np.array([np.asarray(v, dtype=float).ravel() for v in vectors])
    s = np.linalg.svd(flat, compute_uv=False)
    if s[-1] <= tol * max(1.0, s[0]):
        raise DegenerateInputError("Vectors are linearly dependent over R")
    q, _ = np.linalg.qr(flat.T)
    return q.T


def alignment_matrix(ops: Sequence[np.ndarray]) -> np.ndarray:
    """``M[p, q] = tr(L_p^T L_q)`` for the restricted operators ``L_a``."""
    return np.array([[float(np.sum(lp * lq)) for lq in ops] for lp in ops])


def alignment_class(m: np.ndarray, d: int, tol: float) -> Tuple[str, Optional[np.ndarray]]:
    """
    Classify a 3x3 alignment matrix of three anticommuting complex structures.

    Returns:
        ``("invariant", None)`` when all three preserve the subspace,
        ``("orthogonal", None)`` when all three move it to its complement,
        ``("axis", unit 3-vector)`` when exactly one unit combination preserves it
        and the orthogonal ones move it off, otherwise ``("mixed", None)``
    """
    scale = tol * max(1, d)
    if np.max(np.abs(m)) <= scale:
        return "orthogonal", None
    if np.max(np.abs(m - d * np.eye(3))) <= scale:
        return "invariant", None
    vals, vecs = np.linalg.eigh(m)
    if abs(vals[-1] - d) <= scale and np.max(np.abs(vals[:-1])) <= scale:
        axis = vecs[:, -1]
        # fix the sign so the largest component is positive
        if axis[int(np.argmax(np.abs(axis)))] < 0:
            axis = -axis
        return "axis", axis
    return "mixed", None


def hp_type_of(vectors: Sequence[np.ndarray], tol: float = 1e-8) -> Optional[HPType]:
    """
    Detect the HP-type of the real span of ``vectors``.

    Args:
        vectors: R-linearly independent QVectors of equal length
        tol: Relative tolerance

    Returns:
        The HPType (with ``axis`` set for totally complex spans) or ``None``
    """
    if not vectors:
        raise DegenerateInputError("Empty vector list")
    basis = _real_orthonormal(vectors, tol)
    d = basis.shape[0]
    n = np.asarray(vectors[0]).shape[0]
    qvecs = basis.reshape(d, n, 4)

    ops = []
    for unit in np.eye(4)[1:]:
        moved = np.array([right_scale(v, unit).ravel() for v in qvecs])
        ops.append(basis @ moved.T)
    kind, axis = alignment_class(alignment_matrix(ops), d, tol)

    if kind == "orthogonal":
        return HPType("R", d)
    if kind == "invariant" and d % 4 == 0:
        return HPType("H", d // 4)
    if kind == "axis" and d % 2 == 0:
        return HPType("C", d // 2, axis=tuple(float(a) for a in axis))
    if d == 3 and rank_H(np.stack(list(qvecs), axis=1), tol) == 1:
        return HPType("S3", 1)
    return None
