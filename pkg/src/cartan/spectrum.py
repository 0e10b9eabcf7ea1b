"""
Spectrum of the Jacobi operator X -> R(X, H)H
"""

from typing import List, Optional, Tuple

import numpy as np

from ..config.manager import resolve_tol
from ..lts.subspace import RealSubspace
from ..model.curvature import curvature_array
from ..model.tangent import TangentVector
from ..utils.errors import DomainError
from ..utils.logger import logger


def jacobi_operator(h: TangentVector, subspace: Optional[RealSubspace] = None) -> np.ndarray:
    """
    Matrix of X -> R(X, H)H in an orthonormal basis of ``subspace``.

    The operator is self-adjoint; the returned matrix is symmetrized.
    """
    subspace = RealSubspace.full(h.n) if subspace is None else subspace
    basis = subspace.basis
    if basis.shape[0] == 0:
        return np.zeros((0, 0))
    hh = np.broadcast_to(h.matrix, basis.shape)
    images = curvature_array(basis, hh, hh).reshape(basis.shape[0], -1)
    op = subspace.flat @ images.T
    return (op + op.T) / 2.0


def cluster_eigenvalues(values: np.ndarray, tol: float) -> List[Tuple[float, int]]:
    """Merge sorted eigenvalues that lie within ``tol`` of their neighbour."""
    values = np.sort(np.asarray(values, dtype=float))
    clusters: List[List[float]] = []
    for value in values:
        if clusters and value - clusters[-1][-1] <= tol:
            clusters[-1].append(float(value))
        else:
            clusters.append([float(value)])
    return [(float(np.mean(c)), len(c)) for c in clusters]


def jacobi_spectrum(
    h: TangentVector, subspace: Optional[RealSubspace] = None, tol: Optional[float] = None
) -> List[Tuple[float, int]]:
    """
    Eigenvalues of X -> R(X, H)H with multiplicities.

    Args:
        h: Nonzero tangent vector
        subspace: Invariant subspace to restrict to (all of m when omitted)
        tol: Clustering threshold

    Returns:
        ``[(eigenvalue, multiplicity), ...]`` in increasing order
    """
    if h.norm() == 0.0:
        raise DomainError("jacobi_spectrum needs H != 0")
    tol = resolve_tol(tol, "cluster")
    op = jacobi_operator(h, subspace)
    if op.shape[0] == 0:
        return []
    spectrum = cluster_eigenvalues(np.linalg.eigvalsh(op), tol)
    # exact zeros print as -0.0 otherwise
    spectrum = [(0.0 if abs(value) <= tol else value, mult) for value, mult in spectrum]
    logger.debug(f"Jacobi spectrum: {spectrum}")
    return spectrum
