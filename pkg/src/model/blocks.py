"""
Block form of the curvature tensor relative to a conjugation.

For u, v in L+(A) or L-(A) the curvature only involves the values of
u, v, w on the adapted basis (e+, e-).  With a = u(e+), b = v(e+):

    R(u+, v+) w:  e+ -> a<b, w(e+)> - b<a, w(e+)> + 2 w(e+) Im<b, a>
                  e- -> a<b, w(e-)> - b<a, w(e-)>
    R(u+, v-) w:  e+ -> w(e-) <v(e-), u(e+)>
                  e- -> -w(e+) <u(e+), v(e-)>

and symmetrically for R(u-, v-).
"""

from typing import Any, Tuple

import numpy as np

from .tangent import TangentVector
from ..qlinalg.matrix import qdot, right_scale
from ..qlinalg.quaternion import qim
from ..utils.errors import DomainError, ShapeError


def _same_side(a: np.ndarray, b: np.ndarray, w_same: np.ndarray, w_other: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    same = (
        right_scale(a, qdot(b, w_same))
        - right_scale(b, qdot(a, w_same))
        + 2.0 * right_scale(w_same, qim(qdot(b, a)))
    )
    other = right_scale(a, qdot(b, w_other)) - right_scale(b, qdot(a, w_other))
    return same, other


def _side(frame: Any, v: TangentVector, tol: float) -> int:
    plus = frame.in_l_plus(v, tol)
    minus = frame.in_l_minus(v, tol)
    if plus and minus:
        return 0
    if plus:
        return 1
    if minus:
        return -1
    raise DomainError("Vector lies in neither L+(A) nor L-(A) of the frame")


def curvature_blocks(u: TangentVector, v: TangentVector, w: TangentVector, frame: Any, tol: float = 1e-10) -> TangentVector:
    """
    R(u, v)w for u, v each in L+(A) or L-(A) of ``frame``.

    Args:
        u, v: Tangent vectors in L+(A) or L-(A)
        w: Any tangent vector
        frame: A :class:`~src.cartan.frame.Frame`
        tol: Membership tolerance for L+(A) and L-(A)

    Raises:
        DomainError: if u or v is in neither block
    """
    if not u.n == v.n == w.n == frame.n:
        raise ShapeError("curvature_blocks needs u, v, w and the frame over the same n")
    su, sv = _side(frame, u, tol), _side(frame, v, tol)
    if su == 0 or sv == 0:
        return TangentVector.zeros(w.n)

    u_plus, u_minus = frame.values(u)
    v_plus, v_minus = frame.values(v)
    w_plus, w_minus = frame.values(w)

    if su == sv == 1:
        x_plus, x_minus = _same_side(u_plus, v_plus, w_plus, w_minus)
    elif su == sv == -1:
        x_minus, x_plus = _same_side(u_minus, v_minus, w_minus, w_plus)
    elif su == 1:
        x_plus = right_scale(w_minus, qdot(v_minus, u_plus))
        x_minus = -right_scale(w_plus, qdot(u_plus, v_minus))
    else:
        return -curvature_blocks(v, u, w, frame, tol)
    return frame.assemble(x_plus, x_minus)
