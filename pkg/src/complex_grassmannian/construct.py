"""
Lie triple systems of m1 = G2((C, n)) and their positions.

Every listed type has a representative with complex entries.  The P44 types
of kinds C, H and S3 use the alternative description {x + J(Xi(x))}; the
standard shifted form of P44((C, l)) is complex for J instead of totally real.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from .structures import COMPLEX, NEITHER, QUATERNIONIC, TOTALLY_COMPLEX, TOTALLY_REAL, j_position, qk_position
from .tangent import ensure_in_m1
from ..constructors.build import construct, construct_pi4_alternative
from ..constructors.descriptor import LtsDescriptor, parse_descriptor
from ..constructors.tables import isometry_type_name, valid_descriptors
from ..lts.subspace import RealSubspace
from ..utils.errors import ConstructionError, DescriptorError, DomainError
from ..utils.logger import logger

# (J-position, quaternionic position) by family and kinds
POSITION_TABLE = {
    ("Geo",): (TOTALLY_REAL, TOTALLY_REAL),
    ("P0", "R"): (TOTALLY_REAL, TOTALLY_REAL),
    ("P0", "C"): (COMPLEX, TOTALLY_COMPLEX),
    ("S13",): (NEITHER, NEITHER),
    ("P12", "R"): (TOTALLY_REAL, TOTALLY_REAL),
    ("P12", "C"): (NEITHER, NEITHER),
    ("P44", "R"): (TOTALLY_REAL, TOTALLY_REAL),
    ("P44", "C"): (TOTALLY_REAL, TOTALLY_COMPLEX),
    ("P44", "S3"): (TOTALLY_REAL, NEITHER),
    ("P44", "H"): (TOTALLY_REAL, QUATERNIONIC),
    ("G2", "R"): (TOTALLY_REAL, TOTALLY_COMPLEX),
    ("G2", "C"): (COMPLEX, QUATERNIONIC),
    ("PxP", "R", "R"): (TOTALLY_REAL, TOTALLY_REAL),
    ("PxP", "C", "R"): (NEITHER, NEITHER),
    ("PxP", "C", "C"): (COMPLEX, TOTALLY_COMPLEX),
    ("S1xS5",): (TOTALLY_REAL, NEITHER),
    ("Q3",): (COMPLEX, NEITHER),
}

# the plane of P12((R, 2)) meets J_2 of its first vector, so it is not totally real
POSITION_EXCEPTIONS = {"P12:R2": (TOTALLY_REAL, NEITHER)}


def _key(d: LtsDescriptor) -> Tuple[str, ...]:
    if d.family == "PxP":
        kinds = sorted((d.tau.kind, d.tau2.kind))
        return ("PxP", kinds[0], kinds[1])
    if d.tau is not None:
        return (d.family, d.tau.kind)
    return (d.family,)


def exclusion_reason(d: LtsDescriptor) -> Optional[str]:
    """Why ``d`` has no representative in m1, or None if it has one."""
    family = d.family
    if family in ("S5", "Sp2"):
        return f"{family} does not occur in m1"
    if family == "S13" and d.ell != 2:
        return "only the 2-dimensional S13 spheres occur in m1"
    if family == "S1xS5" and d.ell > 3:
        return "S1xS5 occurs in m1 only for l <= 3"
    if family in ("P0", "P12", "G2") and d.tau.kind not in ("R", "C"):
        return f"{family} occurs in m1 only for the RP- and CP-types"
    if family == "PxP" and not (d.tau.is_cp_type and d.tau2.is_cp_type):
        return "PxP occurs in m1 only for RP- and CP-type factors"
    return None


def expected_positions(d: LtsDescriptor) -> Tuple[str, str]:
    """Tabulated (J-position, quaternionic position) of a type in m1."""
    reason = exclusion_reason(d)
    if reason is not None:
        raise DescriptorError(reason)
    return POSITION_EXCEPTIONS.get(str(d), POSITION_TABLE[_key(d)])


def is_maximal_in_m1(d: LtsDescriptor, n: int) -> bool:
    family = d.family
    tau = d.tau
    if family == "P0":
        return tau.kind == "C" and tau.ell == n
    if family == "P12":
        return n == 4 and tau.kind == "C" and tau.ell == 2
    if family == "P44":
        return tau.kind == "H" and 2 * tau.ell == n
    if family == "G2":
        return tau.ell == (n if tau.kind == "R" else n - 1)
    if family == "PxP":
        return tau.kind == d.tau2.kind == "C" and tau.ell + d.tau2.ell == n
    if family == "S1xS5":
        return n == 2 and d.ell == 3
    return family == "Q3" and n == 2


def claC_construct(d, n: int) -> RealSubspace:
    """
    Representative of type ``d`` inside m1.

    Args:
        d: LtsDescriptor or descriptor string
        n: Complex dimension of the complement of C^2

    Raises:
        DescriptorError: if the type is not realized in m1 or violates a bound
        ConstructionError: if the representative leaves m1
    """
    if isinstance(d, str):
        d = parse_descriptor(d)
    reason = exclusion_reason(d)
    if reason is not None:
        raise DescriptorError(f"{d} is not a Lie triple system of m1: {reason}")
    d.validate(n)

    if d.family == "P44" and d.tau.kind in ("C", "H"):
        subspace = construct_pi4_alternative(d.tau.kind, d.tau.ell, n)
    elif d.family == "P44" and d.tau.kind == "S3":
        full = construct_pi4_alternative("H", 1, n)
        subspace = RealSubspace.from_vectors(full.vectors()[:3], n)
    else:
        subspace = construct(d, n)
    try:
        ensure_in_m1(subspace)
    except DomainError as exc:
        raise ConstructionError(f"Representative of {d} leaves m1: {exc}") from exc
    logger.debug(f"Built {d} inside m1 at n={n}")
    return subspace


@dataclass(frozen=True)
class ClaCRow:
    descriptor: LtsDescriptor
    n: int
    dim: int
    j_position: str
    qk_position: str
    maximal: bool
    isometry_type_name: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": str(self.descriptor),
            "n": self.n,
            "dim": self.dim,
            "J": self.j_position,
            "QK": self.qk_position,
            "maximal": self.maximal,
            "isometry_type": self.isometry_type_name,
        }


def claC_list(n: int) -> List[ClaCRow]:
    """Every type realized in m1 at n with its tabulated positions and maximality."""
    rows = []
    for d in valid_descriptors(n):
        if exclusion_reason(d) is not None:
            continue
        j, qk = expected_positions(d)
        rows.append(ClaCRow(d, n, d.dimension(), j, qk, is_maximal_in_m1(d, n), isometry_type_name(d)))
    return rows


def check_row(row: ClaCRow) -> Dict[str, Any]:
    """Construct the representative of a row and compare its computed positions."""
    subspace = claC_construct(row.descriptor, row.n)
    j, j_res = j_position(subspace)
    qk, qk_res = qk_position(subspace)
    passed = (j, qk) == (row.j_position, row.qk_position)
    if not passed:
        logger.warning(f"{row.descriptor} at n={row.n}: positions ({j}, {qk}) differ from ({row.j_position}, {row.qk_position})")
    return {
        "type": str(row.descriptor),
        "n": row.n,
        "J": j,
        "QK": qk,
        "expected": [row.j_position, row.qk_position],
        "passed": passed,
        "residuals": {**j_res, **qk_res},
    }
