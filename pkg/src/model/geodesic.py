"""
Geodesics through the base point and plane utilities
"""

from typing import Optional

import numpy as np
from scipy.linalg import expm

from .tangent import Plane, TangentVector
from ..config.manager import resolve_tol
from ..qlinalg.matrix import from_complex, qadjoint, qmatmul, rank_H, to_complex
from ..utils.errors import DomainError, ShapeError
from ..utils.logger import logger


def ambient_generator(v: TangentVector) -> np.ndarray:
    """The element X = [[0, -v*], [v, 0]] of sp(V' + V) as ``(n+2, n+2, 4)``."""
    n = v.n
    x = np.zeros((n + 2, n + 2, 4))
    x[:2, 2:] = -qadjoint(v.matrix)
    x[2:, :2] = v.matrix
    return x


def ambient_exp(x: np.ndarray) -> np.ndarray:
    """Exponential of a quaternion matrix, computed on its complex adjoint."""
    return from_complex(expm(to_complex(x)))


def geodesic_at(v: TangentVector, t: float) -> Plane:
    """
    Point gamma_v(t) = exp(tX) V' of the geodesic with initial velocity v.

    Args:
        v: Nonzero tangent vector
        t: Time

    Returns:
        The plane spanned by the first two columns of exp(tX)
    """
    if v.norm() == 0.0:
        raise DomainError("The geodesic needs a nonzero initial velocity")
    g = ambient_exp(t * ambient_generator(v))
    return Plane(g[:, :2, :], tol=1e-8)


def geodesic_closed_form_pi4(v: TangentVector, t: float, tol: Optional[float] = None) -> Plane:
    """
    Closed form of the geodesic for characteristic angle pi/4.

    For v with v* v = (|v|^2 / 2) id the geodesic is spanned by
    e_a cos(s/sqrt2) + sqrt2 sin(s/sqrt2) v(e_a)/|v|, where s = t|v|.
    """
    tol = resolve_tol(tol)
    norm = v.norm()
    if norm == 0.0:
        raise DomainError("The geodesic needs a nonzero initial velocity")
    vv = qmatmul(qadjoint(v.matrix), v.matrix) / norm ** 2
    target = np.zeros((2, 2, 4))
    target[0, 0, 0] = target[1, 1, 0] = 0.5
    if np.max(np.abs(vv - target)) > tol:
        raise DomainError("Closed form applies only to characteristic angle pi/4")
    s = t * norm / np.sqrt(2.0)
    basis = np.zeros((v.n + 2, 2, 4))
    basis[0, 0, 0] = basis[1, 1, 0] = np.cos(s)
    basis[2:] = np.sqrt(2.0) * np.sin(s) * v.matrix / norm
    return Plane(basis, tol=1e-8)


def plane_intersection_dim(p: Plane, q: Plane, tol: Optional[float] = None) -> int:
    """Quaternionic dimension of the intersection of two planes."""
    if p.n != q.n:
        raise ShapeError(f"Planes over different n: {p.n} and {q.n}")
    stacked = np.concatenate([p.basis, q.basis], axis=1)
    dim = 4 - rank_H(stacked, resolve_tol(tol))
    logger.debug(f"Plane intersection dimension {dim}")
    return dim


def graph_chart(plane: Plane, tol: Optional[float] = None) -> TangentVector:
    """
    Tangent vector T with plane = graph(T) = {x + T x : x in V'}.

    Raises:
        DomainError: if the plane meets V nontrivially
    """
    tol = resolve_tol(tol)
    top = to_complex(plane.basis[:2])
    if abs(np.linalg.det(top)) <= tol:
        raise DomainError("Plane is not a graph over V'")
    inv_top = from_complex(np.linalg.inv(top))
    return TangentVector(qmatmul(plane.basis[2:], inv_top))
