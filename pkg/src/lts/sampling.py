"""
Sampled invariants of subspaces: characteristic angles, sectional curvatures
and intersections of geodesics with the base point.

These are estimates.  Besides random samples they always include the basis
vectors, the normalized sums and differences of basis pairs, and all basis
planes, which contain the critical directions of the explicit bases built by
the constructors.
"""

from typing import Dict, Optional, Tuple

import numpy as np

from .subspace import RealSubspace
from ..config.manager import config
from ..model.curvature import curvature_array
from ..model.geodesic import geodesic_at, plane_intersection_dim
from ..model.tangent import Plane
from ..qlinalg.matrix import qadjoint, qmatmul
from ..utils.errors import DomainError
from ..utils.logger import logger


def batch_char_angles(vectors: np.ndarray) -> np.ndarray:
    """Characteristic angles of a stack ``(m, n, 2, 4)`` of nonzero tangent vectors."""
    gram = qmatmul(qadjoint(vectors), vectors)
    a, b = gram[:, 0, 0, 0], gram[:, 1, 1, 0]
    c2 = np.sum(gram[:, 0, 1] ** 2, axis=-1)
    disc = np.sqrt(np.maximum((a - b) ** 2 + 4.0 * c2, 0.0))
    big, small = (a + b + disc) / 2.0, (a + b - disc) / 2.0
    return np.arctan(np.sqrt(np.maximum(small, 0.0) / big))


def _coefficients(dim: int, samples: int, rng: np.random.Generator) -> np.ndarray:
    eye = np.eye(dim)
    iu, ju = np.triu_indices(dim, k=1)
    pairs = np.vstack([eye[iu] + eye[ju], eye[iu] - eye[ju]]) / np.sqrt(2.0)
    random = rng.standard_normal((samples, dim))
    random /= np.linalg.norm(random, axis=1, keepdims=True)
    return np.vstack([eye, pairs, random])


def char_angle_spectrum(
    subspace: RealSubspace, samples: Optional[int] = None, seed: Optional[int] = None
) -> Tuple[float, float]:
    """
    Smallest and largest characteristic angle over sampled unit vectors of S.

    Args:
        subspace: Nonzero subspace
        samples: Number of random unit vectors (configured default when omitted)
        seed: Seed of the sampler

    Returns:
        ``(min, max)``
    """
    if subspace.dim == 0:
        raise DomainError("char_angle_spectrum needs a nonzero subspace")
    samples = int(config.get("sampling.samples", 200)) if samples is None else samples
    seed = int(config.get("sampling.seed", 0)) if seed is None else seed
    rng = np.random.default_rng(seed)
    coeffs = _coefficients(subspace.dim, samples, rng)
    vectors = (coeffs @ subspace.flat).reshape(-1, subspace.n, 2, 4)
    phi = batch_char_angles(vectors)
    logger.debug(f"Characteristic angles over {len(phi)} vectors in [{phi.min():.9f}, {phi.max():.9f}]")
    return float(phi.min()), float(phi.max())


def sectional_range(
    subspace: RealSubspace, samples: Optional[int] = None, seed: Optional[int] = None
) -> Tuple[float, float]:
    """
    Smallest and largest sectional curvature over basis planes and random planes.

    Raises:
        DomainError: when dim(S) < 2
    """
    d = subspace.dim
    if d < 2:
        raise DomainError(f"Sectional curvature needs dim >= 2, got {d}")
    samples = int(config.get("sampling.samples", 200)) if samples is None else samples
    seed = int(config.get("sampling.seed", 0)) if seed is None else seed
    rng = np.random.default_rng(seed)

    iu, ju = np.triu_indices(d, k=1)
    eye = np.eye(d)
    first = [eye[iu]]
    second = [eye[ju]]
    if samples:
        x = rng.standard_normal((samples, d))
        y = rng.standard_normal((samples, d))
        x /= np.linalg.norm(x, axis=1, keepdims=True)
        y -= np.sum(x * y, axis=1, keepdims=True) * x
        y /= np.linalg.norm(y, axis=1, keepdims=True)
        first.append(x)
        second.append(y)
    shape = (-1, subspace.n, 2, 4)
    u = (np.vstack(first) @ subspace.flat).reshape(shape)
    v = (np.vstack(second) @ subspace.flat).reshape(shape)
    r = curvature_array(u, v, v)
    k = np.sum(r.reshape(len(u), -1) * u.reshape(len(u), -1), axis=1)
    return float(k.min()), float(k.max())


def min_sectional(subspace: RealSubspace, samples: Optional[int] = None, seed: Optional[int] = None) -> float:
    """Sampled estimate of the minimal sectional curvature of S."""
    return sectional_range(subspace, samples, seed)[0]


def isoclinic_counts(
    subspace: RealSubspace,
    geodesics: Optional[int] = None,
    times: int = 8,
    seed: Optional[int] = None,
    tol: Optional[float] = None,
) -> Dict[int, int]:
    """
    Tally of dim(gamma_v(t) meet V') over sampled geodesics of S.

    Subspaces of constant characteristic angle pi/4 never produce an
    intersection of quaternionic dimension 1.

    Args:
        subspace: Nonzero subspace
        geodesics: Number of random unit initial velocities
        times: Number of random times per geodesic
        seed: Seed of the sampler
        tol: Rank tolerance

    Returns:
        Mapping from intersection dimension to the number of samples
    """
    if subspace.dim == 0:
        raise DomainError("isoclinic_counts needs a nonzero subspace")
    geodesics = int(config.get("sampling.geodesics", 20)) if geodesics is None else geodesics
    seed = int(config.get("sampling.seed", 0)) if seed is None else seed
    rng = np.random.default_rng(seed)
    origin = Plane.origin(subspace.n)

    counts: Dict[int, int] = {0: 0, 1: 0, 2: 0}
    for coefficients in _coefficients(subspace.dim, geodesics, rng):
        v = subspace.vector(coefficients)
        for t in rng.uniform(0.1, 2.0 * np.pi, size=times):
            counts[plane_intersection_dim(geodesic_at(v, float(t)), origin, tol)] += 1
    logger.debug(f"Geodesic intersections with the base point: {counts}")
    return counts


def is_isoclinic(subspace: RealSubspace, **kwargs) -> bool:
    """True when no sampled geodesic meets V' in a quaternionic line."""
    return isoclinic_counts(subspace, **kwargs)[1] == 0
