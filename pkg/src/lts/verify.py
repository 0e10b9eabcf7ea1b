"""
Closure verification, rank and Cartan subalgebras of Lie triple systems.

R(u,v)w = -[[u,v],w], so a subspace S of m is a Lie triple system iff
[k', S] is contained in S for k' = span [S, S].
"""

from typing import List, Optional, Tuple

import numpy as np

from .subspace import RealSubspace
from ..config.manager import resolve_tol
from ..model.curvature import bracket_mm_array
from ..model.tangent import TangentVector
from ..qlinalg.matrix import qadjoint, qmatmul, rank_H
from ..utils.errors import DomainError
from ..utils.logger import logger

MAX_RANK = 2


def _flatten_k(x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
    lead = x1.shape[:-3]
    return np.concatenate([x1.reshape(lead + (-1,)), x2.reshape(lead + (-1,))], axis=-1)


def bracket_span(subspace: RealSubspace, tol: float = 1e-10) -> Tuple[np.ndarray, np.ndarray]:
    """
    Orthonormal basis of k' = span{[u, v] : u, v in S}.

    Returns:
        ``(x1, x2)`` stacks of shapes ``(k, 2, 2, 4)`` and ``(k, n, n, 4)``
    """
    n, d = subspace.n, subspace.dim
    basis = subspace.basis
    iu, ju = np.triu_indices(d, k=1)
    if iu.size == 0:
        return np.zeros((0, 2, 2, 4)), np.zeros((0, n, n, 4))
    x1, x2 = bracket_mm_array(basis[iu], basis[ju])
    rows = _flatten_k(x1, x2)
    _, s, vt = np.linalg.svd(rows, full_matrices=False)
    keep = int(np.sum(s > tol * max(1.0, float(s[0]))))
    vt = vt[:keep]
    return vt[:, :16].reshape(keep, 2, 2, 4), vt[:, 16:].reshape(keep, n, n, 4)


def is_lts(subspace: RealSubspace, tol: Optional[float] = None) -> Tuple[bool, float]:
    """
    Check closure of ``subspace`` under the curvature tensor.

    Args:
        subspace: Candidate Lie triple system
        tol: Relative residual bound

    Returns:
        ``(passed, worst_residual)``
    """
    tol = resolve_tol(tol, "closure")
    if subspace.dim == 0:
        return True, 0.0
    x1, x2 = bracket_span(subspace)
    if x1.shape[0] == 0:
        return True, 0.0
    basis = subspace.basis
    images = qmatmul(x2[:, None], basis[None]) + qmatmul(basis[None], qadjoint(x1)[:, None])
    rows = images.reshape(-1, subspace.flat.shape[1])
    rest = rows - (rows @ subspace.flat.T) @ subspace.flat
    residual = float(np.max(np.linalg.norm(rest, axis=1) / np.maximum(np.linalg.norm(rows, axis=1), 1.0)))
    logger.debug(f"is_lts: dim={subspace.dim}, dim k'={x1.shape[0]}, residual={residual:.3e}")
    return residual <= tol, residual


def _centralizer(subspace: RealSubspace, h: TangentVector, tol: float) -> np.ndarray:
    """Null space (as rows in S-coordinates) of v -> [H, v] on S."""
    basis = subspace.basis
    hh = np.broadcast_to(h.matrix, basis.shape)
    x1, x2 = bracket_mm_array(hh, basis)
    cols = _flatten_k(x1, x2)
    _, s, vt = np.linalg.svd(cols.T, full_matrices=True)
    rank = int(np.sum(s > tol * max(1.0, float(s[0]) if s.size else 1.0)))
    return vt[rank:]


def generic_vectors(subspace: RealSubspace, seed: int = 0) -> List[TangentVector]:
    """Three deterministic generic unit vectors of S."""
    d = subspace.dim
    k = np.arange(1, d + 1, dtype=float)
    rng = np.random.default_rng(seed)
    candidates = [k / d, np.sqrt(k + 1.0), rng.standard_normal(d)]
    return [subspace.vector(c / np.linalg.norm(c)) for c in candidates]


def _regular_centralizer(subspace: RealSubspace, tol: float) -> Tuple[int, TangentVector, np.ndarray]:
    results = []
    for h in generic_vectors(subspace):
        null = _centralizer(subspace, h, tol)
        results.append((null.shape[0], h, null))
    dims = [r[0] for r in results]
    best = min(dims)
    if dims.count(best) < 2:
        raise DomainError(f"Unstable centralizer dimensions {dims}; no regular vector found")
    if best > MAX_RANK:
        raise DomainError(f"Computed rank {best} exceeds the ambient rank {MAX_RANK}")
    logger.debug(f"Centralizer dimensions of generic vectors: {dims}")
    return next(r for r in results if r[0] == best)


def rank_of(subspace: RealSubspace, tol: Optional[float] = None) -> int:
    """
    Rank of a Lie triple system: the dimension of the centralizer of a regular vector.

    Raises:
        DomainError: for non-LTS input or unstable kernel dimensions
    """
    tol = resolve_tol(tol)
    if subspace.dim == 0:
        return 0
    passed, residual = is_lts(subspace, tol)
    if not passed:
        raise DomainError(f"rank_of needs a Lie triple system (closure residual {residual:.3e})")
    return _regular_centralizer(subspace, tol)[0]


def cartan_of(subspace: RealSubspace, tol: Optional[float] = None) -> RealSubspace:
    """A Cartan subalgebra a' of S: the centralizer of a regular element."""
    tol = resolve_tol(tol)
    _, _, null = _regular_centralizer(subspace, tol)
    return RealSubspace.from_flat(null @ subspace.flat, subspace.n)


def common_kernel_dim(subspace: RealSubspace, tol: Optional[float] = None) -> int:
    """Quaternionic dimension of the common kernel in V' of all elements of S."""
    if subspace.dim == 0:
        return 2
    stacked = subspace.basis.reshape(-1, 2, 4)
    return 2 - rank_H(stacked, resolve_tol(tol))
