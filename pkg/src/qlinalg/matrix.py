"""
Dense quaternionic vectors and matrices.

A QVector is an ``(n, 4)`` array, a QMatrix an ``(r, c, 4)`` array.  Scalars
act from the right.  Heavier numerics run on the complex adjoint
``chi(q) = [[z1, z2], [-conj(z2), conj(z1)]]`` where ``q = z1 + z2 j``;
``chi`` is multiplicative and turns the quaternionic adjoint into the
conjugate transpose.
"""

from typing import List, Sequence, Tuple, Union

import numpy as np

from .quaternion import Quaternion, as_qarray, qabs2, qconj, qmul
from ..utils.errors import ShapeError
from ..utils.validators import ensure_positive_tol
from ..utils.logger import logger


def _structure_constants() -> np.ndarray:
    basis = np.eye(4)
    table = np.zeros((4, 4, 4))
    for p in range(4):
        for q in range(4):
            table[:, p, q] = qmul(basis[p], basis[q])
    return table


# (a b)[m] = sum_{p,q} _MUL[m, p, q] a[p] b[q]
_MUL = _structure_constants()


def qmatmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product of quaternion matrices ``(..., r, k, 4) @ (..., k, c, 4)``."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[-2] != b.shape[-3]:
        raise ShapeError(f"Cannot multiply {a.shape[:-1]} by {b.shape[:-1]}")
    return np.einsum("...rkp,...kcq,mpq->...rcm", a, b, _MUL)


def qadjoint(a: np.ndarray) -> np.ndarray:
    """Quaternionic adjoint (conjugate transpose) of ``(..., r, c, 4)``."""
    return qconj(np.swapaxes(np.asarray(a, dtype=float), -3, -2))


def qeye(n: int) -> np.ndarray:
    """Identity ``(n, n, 4)``."""
    out = np.zeros((n, n, 4))
    out[np.arange(n), np.arange(n), 0] = 1.0
    return out


def basis_vector(n: int, k: int, q: Union[Quaternion, Sequence[float], None] = None) -> np.ndarray:
    """Standard basis vector ``f_{k+1} * q`` of H^n (0-based ``k``)."""
    v = np.zeros((n, 4))
    v[k] = as_qarray(q) if q is not None else np.array([1.0, 0.0, 0.0, 0.0])
    return v


def right_scale(v: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Right scalar action ``v * c`` on every entry."""
    return qmul(np.asarray(v, dtype=float), as_qarray(c))


def left_scale(c: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Entrywise left multiplication ``c * v``."""
    return qmul(as_qarray(c), np.asarray(v, dtype=float))


def qdot(v: np.ndarray, w: np.ndarray) -> np.ndarray:
    """
    Quaternionic inner product ``<v, w> = sum conj(v_k) w_k``.

    Args:
        v: QVector ``(n, 4)``
        w: QVector ``(n, 4)``

    Returns:
        Quaternion as a length-4 array
    """
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    if v.shape != w.shape:
        raise ShapeError(f"qdot needs equal lengths, got {v.shape} and {w.shape}")
    return np.sum(qmul(qconj(v), w), axis=0)


def qvnorm(v: np.ndarray) -> float:
    """Norm of a QVector (or any quaternion array)."""
    return float(np.sqrt(np.sum(np.asarray(v, dtype=float) ** 2)))


def to_complex(a: np.ndarray) -> np.ndarray:
    """Complex adjoint of ``(..., r, c, 4)``, shape ``(..., 2r, 2c)``."""
    a = np.asarray(a, dtype=float)
    z1 = a[..., 0] + 1j * a[..., 1]
    z2 = a[..., 2] + 1j * a[..., 3]
    shape = a.shape[:-3] + (2 * a.shape[-3], 2 * a.shape[-2])
    out = np.zeros(shape, dtype=complex)
    out[..., 0::2, 0::2] = z1
    out[..., 0::2, 1::2] = z2
    out[..., 1::2, 0::2] = -np.conj(z2)
    out[..., 1::2, 1::2] = np.conj(z1)
    return out


def from_complex(c: np.ndarray) -> np.ndarray:
    """Inverse of :func:`to_complex`; reads the ``z1``/``z2`` sub-grids."""
    c = np.asarray(c, dtype=complex)
    z1 = c[..., 0::2, 0::2]
    z2 = c[..., 0::2, 1::2]
    return np.stack([z1.real, z1.imag, z2.real, z2.imag], axis=-1)


def complex_column_to_qvector(y: np.ndarray) -> np.ndarray:
    """Quaternion vector whose complex adjoint has ``y`` as first column."""
    y = np.asarray(y, dtype=complex)
    z1 = y[0::2]
    z2 = -np.conj(y[1::2])
    return np.stack([z1.real, z1.imag, z2.real, z2.imag], axis=-1)


def _project_out(v: np.ndarray, basis: List[np.ndarray]) -> np.ndarray:
    for u in basis:
        v = v - right_scale(u, qdot(u, v))
    return v


def gram_schmidt_H(cols: Sequence[np.ndarray], tol: float = 1e-8) -> List[np.ndarray]:
    """
    Orthonormalize QVectors over H, in the given order.

    Modified Gram-Schmidt with one re-orthogonalization pass.  A column is
    dropped when its norm after projection is at most ``tol`` times the
    largest input norm (or ``tol`` if all inputs are small).

    Args:
        cols: QVectors of equal length
        tol: Drop threshold, must be positive

    Returns:
        H-orthonormal QVectors with the same right H-span
    """
    tol = ensure_positive_tol(tol)
    cols = [np.asarray(c, dtype=float) for c in cols]
    if not cols:
        return []
    scale = max(1.0, max(qvnorm(c) for c in cols))
    basis: List[np.ndarray] = []
    for col in cols:
        v = _project_out(_project_out(col, basis), basis)
        norm = qvnorm(v)
        if norm > tol * scale:
            basis.append(v / norm)
    return basis


def rank_H(m: np.ndarray, tol: float = 1e-8) -> int:
    """
    Quaternionic column rank by pivoted modified Gram-Schmidt.

    Args:
        m: QMatrix ``(r, c, 4)``
        tol: Relative pivot threshold

    Returns:
        Rank over H
    """
    tol = ensure_positive_tol(tol)
    m = np.asarray(m, dtype=float)
    remaining = [m[:, k, :].copy() for k in range(m.shape[1])]
    if not remaining:
        return 0
    scale = max(1.0, max(qvnorm(c) for c in remaining))
    rank = 0
    while remaining:
        norms = [qvnorm(c) for c in remaining]
        pivot = int(np.argmax(norms))
        if norms[pivot] <= tol * scale:
            break
        u = remaining.pop(pivot) / norms[pivot]
        remaining = [c - right_scale(u, qdot(u, c)) for c in remaining]
        rank += 1
    return rank


def hermitian2_eigs(a: float, b: float, c: Union[Quaternion, Sequence[float], np.ndarray]) -> Tuple[float, float]:
    """
    Eigenvalues of the quaternionic Hermitian matrix ``[[a, c], [conj(c), b]]``.

    Returns:
        ``(larger, smaller)``
    """
    c2 = float(qabs2(as_qarray(c)))
    disc = float(np.sqrt(max((a - b) ** 2 + 4.0 * c2, 0.0)))
    return ((a + b + disc) / 2.0, (a + b - disc) / 2.0)


def qhermitian_eigh(q: np.ndarray, tol: float = 1e-8) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigen-decomposition of a small quaternionic Hermitian matrix.

    Args:
        q: ``(m, m, 4)`` Hermitian
        tol: Threshold for accepting a new eigen-direction

    Returns:
        ``(values, vectors)`` with values descending and ``vectors[k]`` an
        H-orthonormal QVector satisfying ``q v = v * values[k]``
    """
    q = np.asarray(q, dtype=float)
    m = q.shape[0]
    vals, vecs = np.linalg.eigh(to_complex(q))
    order = np.argsort(vals)[::-1]
    basis: List[np.ndarray] = []
    values: List[float] = []
    for k in order:
        v = _project_out(complex_column_to_qvector(vecs[:, k]), basis)
        norm = qvnorm(v)
        if norm > tol:
            basis.append(v / norm)
            values.append(float(vals[k]))
        if len(basis) == m:
            break
    if len(basis) != m:
        logger.debug(f"qhermitian_eigh recovered {len(basis)} of {m} directions")
    return np.array(values), np.array(basis)
