"""
Kaehler structure J and quaternionic Kaehler structure on m1, and the
position of a subspace with respect to each.

J is multiplication by i.  The quaternionic structure is spanned by
J_a(v) = v X_a for the basis X_1 = diag(i, -i), X_2 = [[0, 1], [-1, 0]],
X_3 = [[0, i], [i, 0]] of su(2) acting on C^2.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from .tangent import CTangentVector, ensure_in_m1
from ..config.manager import resolve_tol
from ..lts.subspace import RealSubspace
from ..model.tangent import TangentVector
from ..qlinalg.hptype import alignment_class, alignment_matrix
from ..utils.errors import ShapeError
from ..utils.logger import logger

COMPLEX = "complex"
QUATERNIONIC = "quaternionic"
TOTALLY_COMPLEX = "totally_complex"
TOTALLY_REAL = "totally_real"
NEITHER = "neither"

X_MATRICES = (
    np.array([[1j, 0], [0, -1j]]),
    np.array([[0, 1], [-1, 0]], dtype=complex),
    np.array([[0, 1j], [1j, 0]]),
)

Operator = Callable[[TangentVector], TangentVector]


def _act(v: TangentVector, func: Callable[[np.ndarray], np.ndarray]) -> TangentVector:
    z = CTangentVector.from_tangent(v)
    return CTangentVector(func(z.matrix)).to_tangent()


@dataclass(frozen=True)
class StructureSpan:
    """J and the triple J_1, J_2, J_3, acting on tangent vectors of m1."""

    x: Tuple[np.ndarray, ...] = field(default=X_MATRICES)

    def __post_init__(self):
        if len(self.x) != 3 or any(np.asarray(m).shape != (2, 2) for m in self.x):
            raise ShapeError("The quaternionic structure needs three 2x2 matrices")

    def j(self, v: TangentVector) -> TangentVector:
        return _act(v, lambda z: 1j * z)

    def ja(self, a: int, v: TangentVector) -> TangentVector:
        """J_a(v) = v X_a for a in 1, 2, 3."""
        x = self.x[a - 1]
        return _act(v, lambda z: z @ x)

    def operators(self) -> List[Operator]:
        return [lambda v, a=a: self.ja(a, v) for a in (1, 2, 3)]

    def relation_residual(self) -> float:
        """Defect of X_a^2 = -1 and X_1 X_2 = X_3 (cyclically)."""
        ident = np.eye(2)
        x1, x2, x3 = self.x
        checks = [x @ x + ident for x in self.x]
        checks.append(x1 @ x2 - x3)
        checks.append(x2 @ x3 - x1)
        checks.append(x3 @ x1 - x2)
        return float(max(np.max(np.abs(c)) for c in checks))


def _restricted(subspace: RealSubspace, op: Operator) -> Tuple[np.ndarray, float]:
    """Matrix of the S-component of op on S and the norm of the part leaving S."""
    basis = subspace.flat
    images = np.array([op(v).flat for v in subspace.vectors()])
    inside = basis @ images.T
    outside = images - (images @ basis.T) @ basis
    return inside, float(np.linalg.norm(outside))


def j_position(subspace: RealSubspace, tol: Optional[float] = None) -> Tuple[str, Dict[str, float]]:
    """
    Position of S with respect to J.

    Returns:
        ``(position, residuals)`` with position one of complex, totally_real, neither

    Raises:
        DomainError: if S is not contained in m1
    """
    tol = resolve_tol(tol)
    ensure_in_m1(subspace, tol)
    inside, outside = _restricted(subspace, StructureSpan().j)
    along = float(np.linalg.norm(inside))
    if outside <= tol:
        position = COMPLEX
    elif along <= tol:
        position = TOTALLY_REAL
    else:
        position = NEITHER
    return position, {"j_outside": outside, "j_inside": along}


def qk_position(subspace: RealSubspace, tol: Optional[float] = None) -> Tuple[str, Dict[str, Any]]:
    """
    Position of S with respect to the quaternionic structure.

    The 3x3 alignment matrix of the restricted operators decides: all of the
    span preserves S (quaternionic), one unit combination preserves S and
    the orthogonal ones move it off (totally complex, with that axis), all
    of the span moves S off (totally real), or none of these.

    Raises:
        DomainError: if S is not contained in m1
    """
    tol = resolve_tol(tol)
    ensure_in_m1(subspace, tol)
    ops = [_restricted(subspace, op)[0] for op in StructureSpan().operators()]
    matrix = alignment_matrix(ops)
    kind, axis = alignment_class(matrix, subspace.dim, tol)
    position = {
        "invariant": QUATERNIONIC,
        "axis": TOTALLY_COMPLEX,
        "orthogonal": TOTALLY_REAL,
    }.get(kind, NEITHER)
    residuals: Dict[str, Any] = {"alignment_eigenvalues": [float(x) for x in np.linalg.eigvalsh(matrix)]}
    if axis is not None:
        residuals["axis"] = [float(a) for a in axis]
    logger.debug(f"Quaternionic position of dim {subspace.dim} subspace: {position}")
    return position, residuals


def position_report(subspace: RealSubspace, tol: Optional[float] = None) -> Dict[str, Any]:
    j, j_res = j_position(subspace, tol)
    qk, qk_res = qk_position(subspace, tol)
    return {"J": j, "QK": qk, "residuals": {**j_res, **qk_res}}


def conjugated_structure_residual(b1: np.ndarray) -> float:
    """
    Distance of B1 X_a B1* from span{X_1, X_2, X_3} for a unitary B1.

    The isotropy element (B1, B2) conjugates J_a to v -> v B1 X_a B1*.
    """
    b1 = np.asarray(b1, dtype=complex)
    if b1.shape != (2, 2):
        raise ShapeError(f"B1 must be 2x2, got {b1.shape}")
    basis = np.array([x.ravel() for x in X_MATRICES])
    real_basis = np.concatenate([basis.real, basis.imag], axis=1) / np.sqrt(2.0)
    worst = 0.0
    for x in X_MATRICES:
        moved = (b1 @ x @ b1.conj().T).ravel()
        flat = np.concatenate([moved.real, moved.imag])
        rest = flat - real_basis.T @ (real_basis @ flat)
        worst = max(worst, float(np.linalg.norm(rest)))
    return worst
