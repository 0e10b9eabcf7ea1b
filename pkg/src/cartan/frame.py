"""
Frames adapted to a conjugation, M-vectors and the root space decomposition.

A frame fixes an adapted basis (e+, e-) of V' together with H+ in L+(A)
and H- in L-(A).  The roots of m with respect to a = span{H+, H-} are
lambda1 = a+, lambda2 = a-, lambda3 = a+ + a-, lambda4 = a+ - a-,
2 lambda1 and 2 lambda2.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..config.manager import resolve_tol
from ..lts.subspace import orthonormal_rows
from ..model.curvature import bracket_mm, metric
from ..model.tangent import TangentVector
from ..qlinalg.matrix import basis_vector, gram_schmidt_H, qadjoint, qdot, qmatmul, right_scale
from ..qlinalg.quaternion import QBASIS, as_qarray, qconj
from ..utils.errors import DomainError, ShapeError, ValidationError
from ..utils.logger import logger

SQRT2 = np.sqrt(2.0)


def outer(x: np.ndarray, e: np.ndarray) -> np.ndarray:
    """The rank-one map y -> x <e, y>, as an ``(len(x), len(e), 4)`` matrix."""
    x = np.asarray(x, dtype=float)
    e = np.asarray(e, dtype=float)
    return qmatmul(x[:, None, :], qconj(e)[None, :, :])


def apply_map(m: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Apply an ``(r, c, 4)`` matrix to a QVector of length c."""
    return qmatmul(np.asarray(m, dtype=float), np.asarray(x, dtype=float)[:, None, :])[:, 0, :]


@dataclass(frozen=True)
class Frame:
    """Conjugation A, complement J, adapted basis (e+, e-) and H+, H-."""

    a: np.ndarray
    j: np.ndarray
    e_plus: np.ndarray
    e_minus: np.ndarray
    h_plus: TangentVector
    h_minus: TangentVector
    tol: float = 1e-8

    def __post_init__(self):
        if self.h_plus.n != self.h_minus.n:
            raise ShapeError("H+ and H- live over different n")
        residual = self.defect()
        if residual > self.tol:
            raise ValidationError(f"Frame relations violated (residual {residual:.3e})")

    @classmethod
    def from_basis(
        cls,
        e_plus: np.ndarray,
        e_minus: np.ndarray,
        h_plus: TangentVector,
        h_minus: TangentVector,
        tol: float = 1e-8,
    ) -> "Frame":
        """Frame whose A and J are determined by the adapted basis."""
        e_plus = np.asarray(e_plus, dtype=float)
        e_minus = np.asarray(e_minus, dtype=float)
        a = outer(e_plus, e_plus) - outer(e_minus, e_minus)
        j = outer(e_minus, e_plus) - outer(e_plus, e_minus)
        return cls(a, j, e_plus, e_minus, h_plus, h_minus, tol)

    @property
    def n(self) -> int:
        return self.h_plus.n

    def defect(self) -> float:
        ident = np.zeros((2, 2, 4))
        ident[0, 0, 0] = ident[1, 1, 0] = 1.0
        hp, hm = self.image_plus, self.image_minus
        checks = [
            qmatmul(self.a, self.a) - ident,
            qmatmul(self.j, self.j) + ident,
            qmatmul(self.j, self.a) + qmatmul(self.a, self.j),
            apply_map(self.a, self.e_plus) - self.e_plus,
            apply_map(self.j, self.e_plus) - self.e_minus,
            qdot(self.e_plus, self.e_plus) - QBASIS[0],
            qdot(self.e_plus, self.e_minus),
            apply_map(self.h_plus.matrix, self.e_minus),
            apply_map(self.h_minus.matrix, self.e_plus),
            qdot(hp, hp) - QBASIS[0],
            qdot(hm, hm) - QBASIS[0],
            qdot(hp, hm),
        ]
        return float(max(np.max(np.abs(c)) for c in checks))

    @property
    def image_plus(self) -> np.ndarray:
        """h+ = H+(e+)."""
        return apply_map(self.h_plus.matrix, self.e_plus)

    @property
    def image_minus(self) -> np.ndarray:
        """h- = H-(e-)."""
        return apply_map(self.h_minus.matrix, self.e_minus)

    def values(self, v: TangentVector):
        """``(v(e+), v(e-))``."""
        return apply_map(v.matrix, self.e_plus), apply_map(v.matrix, self.e_minus)

    def assemble(self, x_plus: np.ndarray, x_minus: np.ndarray) -> TangentVector:
        """The map with e+ -> x_plus and e- -> x_minus."""
        return TangentVector(outer(x_plus, self.e_plus) + outer(x_minus, self.e_minus))

    def values_times(self, v: TangentVector, q: Any) -> TangentVector:
        """The map e -> v(e) q on the adapted basis."""
        vp, vm = self.values(v)
        q = as_qarray(q)
        return self.assemble(right_scale(vp, q), right_scale(vm, q))

    def h_plus_times(self, q: Any) -> TangentVector:
        """H+ . q, the map e+ -> h+ q, e- -> 0."""
        return self.assemble(right_scale(self.image_plus, as_qarray(q)), np.zeros((self.n, 4)))

    def h_minus_times(self, q: Any) -> TangentVector:
        """H- . q, the map e- -> h- q, e+ -> 0."""
        return self.assemble(np.zeros((self.n, 4)), right_scale(self.image_minus, as_qarray(q)))

    def j_of(self, v: TangentVector) -> TangentVector:
        """J(v) = v o J."""
        return v.compose(self.j)

    def in_l_plus(self, v: TangentVector, tol: float = 1e-10) -> bool:
        return float(np.max(np.abs(self.values(v)[1]))) <= tol

    def in_l_minus(self, v: TangentVector, tol: float = 1e-10) -> bool:
        return float(np.max(np.abs(self.values(v)[0]))) <= tol

    def to_dict(self) -> Dict[str, Any]:
        def mat(m):
            return [[list(map(float, q)) for q in row] for row in np.asarray(m)]

        return {
            "A": mat(self.a),
            "J": mat(self.j),
            "e_plus": [list(map(float, q)) for q in self.e_plus],
            "e_minus": [list(map(float, q)) for q in self.e_minus],
            "H_plus": self.h_plus.to_dict(),
            "H_minus": self.h_minus.to_dict(),
        }


def standard_frame(n: int) -> Frame:
    """
    The standard frame: A = diag(1, -1), e+ = e1, e- = e2, H+ = E11, H- = E22.

    Args:
        n: Quaternionic dimension of V, at least 2
    """
    if n < 2:
        raise DomainError(f"standard_frame needs n >= 2, got {n}")
    h_plus = TangentVector.from_entries(n, {(0, 0): QBASIS[0]})
    h_minus = TangentVector.from_entries(n, {(1, 1): QBASIS[0]})
    return Frame.from_basis(basis_vector(2, 0), basis_vector(2, 1), h_plus, h_minus)


def transform_frame(frame: Frame, b1: np.ndarray, b2: np.ndarray) -> Frame:
    """Image of a frame under the isotropy element (B1, B2)."""
    def move(v: TangentVector) -> TangentVector:
        return TangentVector(qmatmul(qmatmul(b2, v.matrix), qadjoint(b1)))

    return Frame.from_basis(
        apply_map(b1, frame.e_plus),
        apply_map(b1, frame.e_minus),
        move(frame.h_plus),
        move(frame.h_minus),
        frame.tol,
    )


def is_cartan(u: TangentVector, v: TangentVector, tol: Optional[float] = None) -> bool:
    """Whether the orthonormal pair (u, v) spans a Cartan subalgebra."""
    tol = resolve_tol(tol)
    gram = np.array([[metric(u, u), metric(u, v)], [metric(v, u), metric(v, v)]])
    if np.max(np.abs(gram - np.eye(2))) > tol:
        raise ValidationError("is_cartan needs an orthonormal pair")
    return bracket_mm(u, v).norm() <= tol


def m_vector(frame: Frame, c: Any, eps: int) -> TangentVector:
    """
    The vector M_{c,eps}: e+ -> h- c / sqrt2, e- -> eps h+ conj(c) / sqrt2.

    Args:
        frame: Adapted frame
        c: Quaternion
        eps: +1 or -1
    """
    if eps not in (1, -1):
        raise DomainError(f"eps must be +1 or -1, got {eps}")
    c = as_qarray(c)
    return frame.assemble(
        right_scale(frame.image_minus, c) / SQRT2,
        eps * right_scale(frame.image_plus, qconj(c)) / SQRT2,
    )


class RootLabel(Enum):
    """Roots p a+ + q a- of the quaternionic 2-Grassmannian."""

    LAMBDA1 = ("lambda1", 1, 0)
    LAMBDA2 = ("lambda2", 0, 1)
    LAMBDA3 = ("lambda3", 1, 1)
    LAMBDA4 = ("lambda4", 1, -1)
    TWO_LAMBDA1 = ("2lambda1", 2, 0)
    TWO_LAMBDA2 = ("2lambda2", 0, 2)

    @property
    def key(self) -> str:
        return self.value[0]

    @property
    def p(self) -> int:
        return self.value[1]

    @property
    def q(self) -> int:
        return self.value[2]

    def value_at(self, frame: Frame, h: TangentVector) -> float:
        """lambda(H) for H in a."""
        return self.p * metric(h, frame.h_plus) + self.q * metric(h, frame.h_minus)

    @classmethod
    def from_key(cls, key: str) -> "RootLabel":
        for label in cls:
            if label.key == key:
                return label
        raise DomainError(f"Unknown root label {key!r}")


@dataclass(frozen=True)
class RootDatum:
    """A root with its multiplicity and an orthonormal basis of its root space."""

    label: RootLabel
    basis: np.ndarray

    @property
    def multiplicity(self) -> int:
        return self.basis.shape[0]

    @property
    def n(self) -> int:
        return self.basis.shape[1]

    def projector(self) -> np.ndarray:
        flat = self.basis.reshape(self.multiplicity, -1)
        return flat.T @ flat

    def project(self, v: TangentVector) -> TangentVector:
        flat = self.basis.reshape(self.multiplicity, -1)
        return TangentVector.from_flat(flat.T @ (flat @ v.flat), v.n)

    def vectors(self) -> List[TangentVector]:
        return [TangentVector(b) for b in self.basis]

    def to_dict(self) -> Dict[str, Any]:
        return {"label": self.label.key, "p": self.label.p, "q": self.label.q, "multiplicity": self.multiplicity}


def _stack(vectors: Sequence[TangentVector], n: int) -> np.ndarray:
    if not vectors:
        return np.zeros((0, n, 2, 4))
    return orthonormal_rows(np.array([v.flat for v in vectors])).reshape(-1, n, 2, 4)


def complement_images(frame: Frame) -> List[np.ndarray]:
    """An H-orthonormal basis of the complement of {h+, h-} in V."""
    n = frame.n
    cols = [frame.image_plus, frame.image_minus] + [basis_vector(n, k) for k in range(n)]
    return gram_schmidt_H(cols, 1e-8)[2:]


def cartan_basis(frame: Frame) -> np.ndarray:
    """Orthonormal basis (H+, H-) of a as an array."""
    return np.array([frame.h_plus.matrix, frame.h_minus.matrix])


def root_data(frame: Frame, n: Optional[int] = None) -> List[RootDatum]:
    """
    Root spaces from their explicit descriptions.

    m_lambda1 = {x e+* : x ⟂ h+, h-}, m_lambda2 likewise with e-,
    m_lambda3/4 = {M_{c,-1}} / {M_{c,+1}}, m_2lambda1 = Im(H) . H+,
    m_2lambda2 = Im(H) . H-.  Roots of multiplicity zero (lambda1 and lambda2
    when n = 2) are omitted.
    """
    n = frame.n if n is None else n
    if n != frame.n:
        raise ShapeError(f"Frame lives over n={frame.n}, asked for n={n}")
    if n < 2:
        raise DomainError(f"root_data needs n >= 2, got {n}")
    rest = complement_images(frame)
    spans = {
        RootLabel.LAMBDA1: [frame.assemble(right_scale(x, q), np.zeros((n, 4))) for x in rest for q in QBASIS],
        RootLabel.LAMBDA2: [frame.assemble(np.zeros((n, 4)), right_scale(x, q)) for x in rest for q in QBASIS],
        RootLabel.LAMBDA3: [m_vector(frame, q, -1) for q in QBASIS],
        RootLabel.LAMBDA4: [m_vector(frame, q, 1) for q in QBASIS],
        RootLabel.TWO_LAMBDA1: [frame.h_plus_times(q) for q in QBASIS[1:]],
        RootLabel.TWO_LAMBDA2: [frame.h_minus_times(q) for q in QBASIS[1:]],
    }
    data = [RootDatum(label, _stack(vectors, n)) for label, vectors in spans.items() if vectors]
    logger.debug(f"Root multiplicities for n={n}: {[(d.label.key, d.multiplicity) for d in data]}")
    return data


def root_sharp(label: RootLabel, frame: Frame) -> TangentVector:
    """Riesz vector p H+ + q H- of the root p a+ + q a-."""
    return frame.h_plus * label.p + frame.h_minus * label.q
