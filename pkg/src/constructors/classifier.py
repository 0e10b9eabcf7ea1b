"""
Recognition of the type of a Lie triple system from isotropy invariants.

Rank-one systems are told apart by the characteristic angle of their
elements, the multiplicity of the top Jacobi eigenvalue and the common
kernel in V'.  Rank-two systems are determined by their restricted root
multiplicities (m1, m2, m3, m4, m21, m22) read off at a test vector of the
Cartan subalgebra, up to the Weyl symmetries swapping lambda1 with lambda2
and lambda3 with lambda4.
"""

from typing import Dict, Optional, Tuple

from .descriptor import PHI_P12, PHI_PI4, PHI_S13, PHI_ZERO, LtsDescriptor
from ..cartan.angles import char_angle
from ..cartan.spectrum import jacobi_spectrum
from ..config.manager import resolve_tol
from ..lts.roots import restricted_root_system
from ..lts.subspace import RealSubspace
from ..lts.verify import cartan_of, common_kernel_dim, is_lts, rank_of
from ..qlinalg.hptype import HPType
from ..utils.errors import DomainError
from ..utils.logger import logger

ANGLE_MATCH = 1e-6
KIND_OF_WIDTH = {1: "R", 2: "C", 3: "S3", 4: "H"}
# minimal sectional curvature of the rank-one families by angle
RANK_ONE_FAMILIES = ((PHI_ZERO, "P0", 1.0), (PHI_P12, "P12", 0.2), (PHI_PI4, "P44", 0.5), (PHI_S13, "S13", 0.4))

Multiplicities = Tuple[int, int, int, int, int, int]


def _tau(width: int, ell: int) -> HPType:
    kind = KIND_OF_WIDTH.get(width)
    if kind is None or ell < 1:
        raise DomainError(f"No HP-type has width {width} and dimension {ell}")
    return HPType(kind, 1 if kind == "S3" else ell)


def _width_from_top(m4: int, dim: int) -> int:
    """Width of the HP-type from the multiplicity of the eigenvalue 4 kappa."""
    if m4 == 2 and dim == 3:
        return 3
    widths = {0: 1, 1: 2, 3: 4}
    if m4 not in widths:
        raise DomainError(f"Top Jacobi eigenvalue multiplicity {m4} fits no HP-type")
    return widths[m4]


def _top_multiplicity(spectrum, value: float) -> int:
    return sum(mult for v, mult in spectrum if abs(v - value) <= 1e-5)


def _classify_rank_one(subspace: RealSubspace, tol: float) -> LtsDescriptor:
    d = subspace.dim
    h = cartan_of(subspace, tol).vectors()[0]
    phi = char_angle(h)
    if d == 1:
        return LtsDescriptor.geo(min(max(phi, 0.0), PHI_PI4)).canonical()

    match = [(family, kappa) for angle, family, kappa in RANK_ONE_FAMILIES if abs(phi - angle) <= ANGLE_MATCH]
    if not match:
        raise DomainError(f"Rank-one system of dim {d} with unexpected characteristic angle {phi:.9f}")
    family, kappa = match[0]
    if family == "S13":
        return LtsDescriptor.with_ell("S13", d)

    spectrum = jacobi_spectrum(h, subspace)
    m4 = _top_multiplicity(spectrum, 4.0 * kappa)
    logger.debug(f"Rank one: dim={d}, phi={phi:.9f}, spectrum={spectrum}")
    if family == "P44" and d == 5 and m4 == 4:
        return LtsDescriptor.plain("S5")

    width = _width_from_top(m4, d)
    if family == "P0" and common_kernel_dim(subspace, tol) == 0:
        if d != 2 * width or width == 3:
            raise DomainError(f"Rank-one system of angle 0 without common kernel has dim {d}")
        return LtsDescriptor.with_tau("G2", _tau(width, 1))
    if d % width:
        raise DomainError(f"Dimension {d} is not a multiple of the width {width}")
    return LtsDescriptor.with_tau(family, _tau(width, d // width))


def normalized_multiplicities(multiplicities: Dict[str, int]) -> Multiplicities:
    """(m1, m2, m3, m4, m21, m22) with (m1, m21) >= (m2, m22) and m3 >= m4."""
    def get(key: str) -> int:
        return int(multiplicities.get(key, 0))

    first, second = (get("lambda1"), get("2lambda1")), (get("lambda2"), get("2lambda2"))
    first, second = max(first, second), min(first, second)
    m3, m4 = sorted((get("lambda3"), get("lambda4")), reverse=True)
    return first[0], second[0], m3, m4, first[1], second[1]


def descriptor_from_multiplicities(m: Multiplicities) -> LtsDescriptor:
    """The rank-two type with the given normalized root multiplicities."""
    m1, m2, m3, m4, m21, m22 = m
    if m3 == m4 == 0:
        w1, w2 = m21 + 1, m22 + 1
        if m1 % w1 or m2 % w2:
            raise DomainError(f"Multiplicities {m} fit no product type")
        return LtsDescriptor.product(_tau(w1, m1 // w1 + 1), _tau(w2, m2 // w2 + 1)).canonical()
    if m4 == 0 and m1 == m2 == m21 == m22 == 0:
        return LtsDescriptor.with_ell("S1xS5", m3 + 1)
    if m == (0, 0, 2, 2, 2, 2):
        return LtsDescriptor.plain("Sp2")
    if m == (0, 0, 1, 1, 1, 1):
        return LtsDescriptor.plain("Q3")
    w = m3
    if m3 == m4 and m1 == m2 and m21 == m22 == w - 1 and w in (1, 2, 4) and m1 % w == 0:
        return LtsDescriptor.with_tau("G2", _tau(w, m1 // w + 2))
    raise DomainError(f"Root multiplicities {m} match no rank-two type")


def classify(subspace: RealSubspace, tol: Optional[float] = None) -> LtsDescriptor:
    """
    Type of a Lie triple system.

    Args:
        subspace: A nonzero Lie triple system
        tol: Membership tolerance

    Returns:
        LtsDescriptor in canonical form (identifications of the Geo family
        applied, PxP with the larger factor first)

    Raises:
        DomainError: for the zero space, non-LTS input or unrecognized invariants
    """
    tol = resolve_tol(tol)
    if subspace.dim == 0:
        raise DomainError("The zero subspace has no type")
    passed, residual = is_lts(subspace, tol)
    if not passed:
        raise DomainError(f"Not a Lie triple system (closure residual {residual:.3e})")
    rank = 1 if subspace.dim == 1 else rank_of(subspace, tol)
    if rank == 1:
        result = _classify_rank_one(subspace, tol)
    else:
        system = restricted_root_system(subspace, tol)
        result = descriptor_from_multiplicities(normalized_multiplicities(system.multiplicities))
    logger.info(f"Classified dim {subspace.dim} system as {result}")
    return result


def same_type(first: LtsDescriptor, second: LtsDescriptor, tol: float = 1e-7) -> bool:
    """Equality of types up to the Geo identifications and swapping PxP factors."""
    a, b = first.canonical(), second.canonical()
    if a.family == b.family == "Geo":
        return abs(a.t - b.t) <= tol
    return a == b
