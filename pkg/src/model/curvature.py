"""
Metric, isotropy action, Lie brackets and curvature on m = L(V', V).

With X = [[0, -v*], [v, 0]] the bracket of two tangent vectors is the
isotropy element (v*u - u*v, v u* - u v*) and k acts on m by
[X, v] = X2 v + v X1*.  The curvature tensor is R(u,v)w = -[[u,v],w].
"""

from typing import Optional

import numpy as np

from .tangent import IsotropyElement, KElement, TangentVector
from ..config.manager import resolve_tol
from ..qlinalg.matrix import qadjoint, qmatmul
from ..utils.errors import ShapeError, ValidationError


def _same_n(*vectors: TangentVector) -> None:
    ns = {v.n for v in vectors}
    if len(ns) != 1:
        raise ShapeError(f"Tangent vectors live over different n: {sorted(ns)}")


def metric(u: TangentVector, v: TangentVector) -> float:
    """Real inner product Re(<u(e1), v(e1)> + <u(e2), v(e2)>)."""
    _same_n(u, v)
    return float(np.dot(u.flat, v.flat))


def isotropy_act(g: IsotropyElement, v: TangentVector) -> TangentVector:
    """The isotropy action B v = B2 o v o B1*."""
    if g.n != v.n:
        raise ShapeError(f"Isotropy element over n={g.n} applied to a vector over n={v.n}")
    return TangentVector(qmatmul(qmatmul(g.b2, v.matrix), qadjoint(g.b1)))


def bracket_mm_array(u: np.ndarray, v: np.ndarray):
    """Array form of :func:`bracket_mm`, broadcasting over leading axes."""
    us, vs = qadjoint(u), qadjoint(v)
    x1 = qmatmul(vs, u) - qmatmul(us, v)
    x2 = qmatmul(v, us) - qmatmul(u, vs)
    return x1, x2


def bracket_mm(u: TangentVector, v: TangentVector) -> KElement:
    """Lie bracket of two tangent vectors, an element of k."""
    _same_n(u, v)
    x1, x2 = bracket_mm_array(u.matrix, v.matrix)
    return KElement(x1, x2)


def bracket_km(x: KElement, v: TangentVector) -> TangentVector:
    """Action [X, v] = X2 o v + v o X1* of k on m."""
    if x.n != v.n:
        raise ShapeError(f"k-element over n={x.n} applied to a vector over n={v.n}")
    return TangentVector(qmatmul(x.x2, v.matrix) + qmatmul(v.matrix, qadjoint(x.x1)))


def curvature_array(u: np.ndarray, v: np.ndarray, w: np.ndarray) -> np.ndarray:
    """R(u,v)w on raw ``(..., n, 2, 4)`` arrays."""
    us, vs = qadjoint(u), qadjoint(v)
    left = qmatmul(u, vs) - qmatmul(v, us)
    right = qmatmul(vs, u) - qmatmul(us, v)
    return qmatmul(left, w) + qmatmul(w, right)


def curvature(u: TangentVector, v: TangentVector, w: TangentVector) -> TangentVector:
    """
    Curvature tensor of G2(V' + V).

    Args:
        u, v, w: Tangent vectors over the same n

    Returns:
        R(u,v)w = (u v* - v u*) w + w (v* u - u* v)
    """
    _same_n(u, v, w)
    return TangentVector(curvature_array(u.matrix, v.matrix, w.matrix))


def sectional_curvature(u: TangentVector, v: TangentVector, tol: Optional[float] = None) -> float:
    """Sectional curvature <R(u,v)v, u> of an orthonormal pair."""
    tol = resolve_tol(tol)
    gram = np.array([[metric(u, u), metric(u, v)], [metric(v, u), metric(v, v)]])
    defect = float(np.max(np.abs(gram - np.eye(2))))
    if defect > tol:
        raise ValidationError(f"Sectional curvature needs an orthonormal pair (defect {defect:.3e})")
    return metric(curvature(u, v, v), u)
