"""
Orthonormal bases of the Lie triple systems of each type in the standard frame.

Rows are 0-based: row r of a tangent vector is the coefficient on f_{r+1}.
Column 0 is the image of e+ = e1 and column 1 the image of e- = e2, so
H+ = E(0, 0) and H- = E(1, 1).
"""

from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from .descriptor import LtsDescriptor, parse_descriptor
from ..cartan.frame import m_vector, standard_frame
from ..config.manager import resolve_tol
from ..lts.subspace import RealSubspace
from ..model.curvature import isotropy_act
from ..model.tangent import IsotropyElement, TangentVector
from ..qlinalg.hptype import HPType
from ..qlinalg.quaternion import QBASIS, as_qarray, qconj, qmul
from ..utils.errors import ConstructionError, DescriptorError, ShapeError, ValidationError
from ..utils.logger import logger

ONE, I, J, K = QBASIS
SQRT2, SQRT5, SQRT10 = np.sqrt(2.0), np.sqrt(5.0), np.sqrt(10.0)

# row of Theta(q) for q = 1, i, j, k in the P12 constructions
THETA_ROWS = (0, 2, 3, 4)


def entry(n: int, row: int, col: int, q=ONE) -> TangentVector:
    """The map with the single entry ``q`` at (row, col)."""
    return TangentVector.from_entries(n, {(row, col): q})


def units_of(tau: HPType) -> np.ndarray:
    return tau.field_units()


def _subspace(vectors: Sequence[TangentVector], n: int, expected: int, name: str) -> RealSubspace:
    subspace = RealSubspace.from_vectors(vectors, n)
    if subspace.dim != expected:
        raise ConstructionError(f"{name}: expected dimension {expected}, built {subspace.dim}")
    return subspace


def _geo(d: LtsDescriptor, n: int) -> List[TangentVector]:
    frame = standard_frame(n)
    return [frame.h_plus * np.cos(d.t) + frame.h_minus * np.sin(d.t)]


def _p0(d: LtsDescriptor, n: int) -> List[TangentVector]:
    return [entry(n, r, 0, q) for r in range(d.tau.ell) for q in units_of(d.tau)]


def _s13(d: LtsDescriptor, n: int) -> List[TangentVector]:
    frame = standard_frame(n)
    a, b = np.sqrt(3.0 / 5.0), np.sqrt(2.0 / 5.0)
    vectors = [
        (frame.h_plus * 3.0 + frame.h_minus) / SQRT10,
        m_vector(frame, ONE, 1) * a + frame.h_minus_times(I) * b,
    ]
    if d.ell == 3:
        vectors.append(m_vector(frame, J, 1) * a + frame.h_minus_times(K) * b)
    return vectors


def _p12_core(units: np.ndarray, n: int) -> List[TangentVector]:
    """(q H- + 2 Theta(q)) / sqrt5 with Theta(q) on the totally real rows."""
    frame = standard_frame(n)
    vectors = []
    for q in units:
        row = THETA_ROWS[int(np.argmax(np.abs(q)))]
        vectors.append((frame.h_minus_times(q) + entry(n, row, 0) * 2.0) / SQRT5)
    return vectors


def _p12(d: LtsDescriptor, n: int) -> List[TangentVector]:
    tau = d.tau
    frame = standard_frame(n)
    if tau.dim == 1:
        return _p12_core(units_of(tau), n)
    if tau.kind == "R":
        return [
            (frame.h_plus * 2.0 + frame.h_minus) / SQRT5,
            m_vector(frame, ONE, 1) * np.sqrt(2.0 / 5.0) + entry(n, 2, 1) * np.sqrt(3.0 / 5.0),
        ]
    if tau.kind == "C":
        core = _p12_core(units_of(HPType("C", 1)), n)
        v1 = TangentVector.from_entries(n, {(1, 0): ONE, (0, 1): ONE, (2, 1): I, (3, 1): SQRT2 * ONE}) / SQRT5
        v2 = TangentVector.from_entries(n, {(1, 0): I, (0, 1): -I, (2, 1): ONE, (3, 1): SQRT2 * I}) / SQRT5
        return core + [v1, v2]
    # (H, 2)
    core = _p12_core(QBASIS, n)
    extra = []
    for c in QBASIS:
        cb = qconj(c)
        entries = {
            (1, 0): c / SQRT2,
            (0, 1): cb / SQRT2,
            (2, 1): qmul(cb, I) / SQRT2,
            (3, 1): qmul(cb, J) / SQRT2,
            (4, 1): qmul(cb, K) / SQRT2,
        }
        extra.append(TangentVector.from_entries(n, entries) * np.sqrt(2.0 / 5.0))
    return core + extra


def shifted_rows(ell1: int, ell2: int):
    """Disjoint row sets [0, 2..ell1] and [1, ell1+1..ell1+ell2-1]."""
    first = [0] + list(range(2, ell1 + 1))
    second = [1] + list(range(ell1 + 1, ell1 + ell2))
    return first, second


def _p44(d: LtsDescriptor, n: int) -> List[TangentVector]:
    first, second = shifted_rows(d.tau.ell, d.tau.ell)
    return [
        TangentVector.from_entries(n, {(r1, 0): q, (r2, 1): q}) / SQRT2
        for r1, r2 in zip(first, second)
        for q in units_of(d.tau)
    ]


def _s5(d: LtsDescriptor, n: int) -> List[TangentVector]:
    frame = standard_frame(n)
    return [(frame.h_plus + frame.h_minus) / SQRT2] + [m_vector(frame, c, -1) for c in QBASIS]


def _s1xs5(d: LtsDescriptor, n: int) -> List[TangentVector]:
    frame = standard_frame(n)
    return [frame.h_plus, frame.h_minus] + [m_vector(frame, c, 1) for c in QBASIS[: d.ell - 1]]


def _g2(d: LtsDescriptor, n: int) -> List[TangentVector]:
    return [entry(n, r, col, q) for col in (0, 1) for r in range(d.tau.ell) for q in units_of(d.tau)]


def _pxp(d: LtsDescriptor, n: int) -> List[TangentVector]:
    first, second = shifted_rows(d.tau.ell, d.tau2.ell)
    return [entry(n, r, 0, q) for r in first for q in units_of(d.tau)] + [
        entry(n, r, 1, q) for r in second for q in units_of(d.tau2)
    ]


def _sp2(d: LtsDescriptor, n: int) -> List[TangentVector]:
    vectors = [entry(n, r, r, q) for r in (0, 1) for q in (I, J, K)]
    vectors.append(TangentVector.from_entries(n, {(0, 1): ONE, (1, 0): -ONE}) / SQRT2)
    vectors.extend(TangentVector.from_entries(n, {(0, 1): q, (1, 0): q}) / SQRT2 for q in (I, J, K))
    return vectors


def q3_vector(n: int) -> TangentVector:
    """The vector v = M_{i,-1} whose span with v.i is removed from G2((C,2))."""
    return m_vector(standard_frame(n), I, -1)


def _q3(d: LtsDescriptor, n: int) -> RealSubspace:
    g2 = construct(LtsDescriptor.with_tau("G2", "C2"), n)
    v = q3_vector(n)
    q3 = RealSubspace.from_vectors([v, v.right(I)], n).orthocomplement_in(g2)
    if q3.dim != d.dimension():
        raise ConstructionError(f"Q3: expected dimension {d.dimension()}, built {q3.dim}")
    return q3


BUILDERS: Dict[str, Callable[[LtsDescriptor, int], List[TangentVector]]] = {
    "Geo": _geo,
    "P0": _p0,
    "S13": _s13,
    "P12": _p12,
    "P44": _p44,
    "S5": _s5,
    "S1xS5": _s1xs5,
    "G2": _g2,
    "PxP": _pxp,
    "Sp2": _sp2,
}


def construct(d, n: int) -> RealSubspace:
    """
    Explicit Lie triple system of type ``d`` inside G2(H^{n+2}).

    Args:
        d: LtsDescriptor or descriptor string
        n: Quaternionic dimension of V

    Returns:
        RealSubspace with the constructed orthonormal basis

    Raises:
        DescriptorError: if the type does not exist at this n
    """
    if isinstance(d, str):
        d = parse_descriptor(d)
    d.validate(n)
    if d.family == "Q3":
        subspace = _q3(d, n)
    else:
        subspace = _subspace(BUILDERS[d.family](d, n), n, d.dimension(), str(d))
    logger.debug(f"Constructed {d} at n={n}: dim {subspace.dim}")
    return subspace


def default_xi(kind: str, ell: int) -> np.ndarray:
    """Block rotation with f_{2m-1} -> f_{2m}, f_{2m} -> -f_{2m-1}."""
    xi = np.zeros((2 * ell, 2 * ell))
    for m in range(ell):
        xi[2 * m + 1, 2 * m] = 1.0
        xi[2 * m, 2 * m + 1] = -1.0
    return xi.astype(complex) if kind == "H" else xi


def _check_xi(kind: str, xi: np.ndarray, ell: int, tol: float) -> np.ndarray:
    xi = np.asarray(xi, dtype=complex)
    if xi.shape != (2 * ell, 2 * ell):
        raise ShapeError(f"Xi must be {2 * ell}x{2 * ell}, got {xi.shape}")
    if kind == "C":
        if np.max(np.abs(xi.imag), initial=0.0) > tol:
            raise ValidationError("Xi of the complex kind must be real")
        xi = xi.real
    ident = np.eye(2 * ell)
    orthogonality = float(np.max(np.abs(xi.conj().T @ xi - ident)))
    # Xi(z) = xi conj(z) for the quaternionic kind, so Xi^2 = xi conj(xi)
    square = xi @ xi.conj() if kind == "H" else xi @ xi
    involution = float(np.max(np.abs(square + ident)))
    if orthogonality > tol or involution > tol:
        raise ValidationError(
            f"Xi must be orthogonal with Xi^2 = -id (defects {orthogonality:.3e}, {involution:.3e})"
        )
    return xi


def construct_pi4_alternative(kind: str, ell: int, n: int, xi: Optional[np.ndarray] = None) -> RealSubspace:
    """
    The set {x + J(Xi(x)) : x in W} of constant characteristic angle pi/4.

    For ``kind="C"`` W is the totally real span of f_1..f_{2l} (real entries)
    and Xi is a real orthogonal matrix; for ``kind="H"`` W is the totally
    complex span with C-entries and Xi(z) = xi . conj(z) is anti-linear.
    J(y)(e+) = 0 and J(y)(e-) = -y(e+), so the vector is [x, -Xi(x)].

    Args:
        kind: "C" or "H", the type P44((kind, ell)) the result is congruent to
        ell: Half of the dimension of W over the entry field
        n: Quaternionic dimension of V
        xi: Optional custom Xi as a (2l, 2l) matrix

    Raises:
        DescriptorError: when 2l > n or the kind is unknown
        ValidationError: when Xi is not orthogonal with Xi^2 = -id
    """
    if kind not in ("C", "H"):
        raise DescriptorError(f"Alternative pi/4 form exists for kinds C and H, got {kind!r}")
    if ell < 1 or 2 * ell > n:
        raise DescriptorError(f"Alternative pi/4 form needs 1 <= 2l <= n, got l={ell}, n={n}")
    tol = resolve_tol(None)
    xi = _check_xi(kind, default_xi(kind, ell) if xi is None else xi, ell, tol)
    scalars = [1.0, 1j] if kind == "H" else [1.0]

    vectors = []
    for r in range(2 * ell):
        for s in scalars:
            x = np.zeros(2 * ell, dtype=complex)
            x[r] = s
            image = xi @ np.conj(x) if kind == "H" else xi @ x.real
            matrix = np.zeros((n, 2, 4))
            matrix[: 2 * ell, 0, 0], matrix[: 2 * ell, 0, 1] = x.real, x.imag
            image = np.asarray(image, dtype=complex)
            matrix[: 2 * ell, 1, 0], matrix[: 2 * ell, 1, 1] = -image.real, -image.imag
            vectors.append(TangentVector(matrix) / SQRT2)
    return _subspace(vectors, n, len(vectors), f"P44 alternative ({kind}, {ell})")


def randomize(subspace: RealSubspace, seed: int) -> RealSubspace:
    """Image of ``subspace`` under a seeded pseudorandom isotropy element."""
    g = IsotropyElement.random(subspace.n, np.random.default_rng(seed))
    return apply_isotropy(subspace, g)


def apply_isotropy(subspace: RealSubspace, g: IsotropyElement) -> RealSubspace:
    if g.n != subspace.n:
        raise ShapeError(f"Isotropy element acts on n={g.n}, subspace lives over n={subspace.n}")
    return RealSubspace.from_vectors([isotropy_act(g, v) for v in subspace.vectors()], subspace.n)


def scalar_isotropy(n: int, b1=ONE, b2=ONE) -> IsotropyElement:
    """(b1 . I, b2 . I) for unit quaternions b1, b2."""
    first = np.zeros((2, 2, 4))
    second = np.zeros((n, n, 4))
    first[np.arange(2), np.arange(2)] = as_qarray(b1)
    second[np.arange(n), np.arange(n)] = as_qarray(b2)
    return IsotropyElement(first, second)
