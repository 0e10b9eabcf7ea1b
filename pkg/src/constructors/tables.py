"""
Dimension, rank, maximality, isometry type and inclusions of the LTS types.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from .build import apply_isotropy, construct, scalar_isotropy
from .descriptor import LtsDescriptor
from ..lts.subspace import RealSubspace
from ..model.tangent import IsotropyElement
from ..qlinalg.hptype import HPType
from ..qlinalg.matrix import qeye
from ..qlinalg.quaternion import UNIT_J
from ..utils.errors import ConstructionError, DomainError
from ..utils.logger import logger

MAXIMAL = "maximal"
# G2((H, n)) is all of m
FULL = "full"

Container = Union[LtsDescriptor, str]

DIM_FORMULAS = {
    "Geo": "1",
    "P0": "w(tau) dim(tau)",
    "S13": "l",
    "P12": "w(tau) dim(tau)",
    "P44": "w(tau) dim(tau)",
    "S5": "5",
    "G2": "2 w(tau) dim(tau)",
    "PxP": "w(tau1) dim(tau1) + w(tau2) dim(tau2)",
    "S1xS5": "1 + l",
    "Sp2": "10",
    "Q3": "6",
}

MAXIMAL_CONDITIONS = {
    "Geo": "never",
    "P0": "tau = (H, n)",
    "S13": "never",
    "P12": "tau = S3 if n = 4; tau = (H, 2) if n = 5",
    "P44": "never",
    "S5": "never",
    "G2": "tau = (H, n-1) or (C, n)",
    "PxP": "tau1, tau2 quaternionic with l1 + l2 = n",
    "S1xS5": "l = 5 and n = 2",
    "Sp2": "n = 2",
    "Q3": "never",
}

# minimal sectional curvature of the rank-one projective types
KAPPA = {"P0": 1.0, "P12": 0.2, "P44": 0.5}



@dataclass(frozen=True)
class TypeFacts:
    """Tabulated properties of a type at a given n."""

    descriptor: LtsDescriptor
    n: int
    dim: int
    dim_formula: str
    rank: int
    maximal: bool
    maximal_condition: str
    isometry_type_name: str
    curvature: Optional[float] = None
    constant_curvature: bool = False
    diameter: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": str(self.descriptor),
            "n": self.n,
            "dim": self.dim,
            "dim_formula": self.dim_formula,
            "rank": self.rank,
            "maximal": self.maximal,
            "maximal_condition": self.maximal_condition,
            "isometry_type": self.isometry_type_name,
            "curvature": self.curvature,
            "constant_curvature": self.constant_curvature,
            "diameter": self.diameter,
        }


def _projective(tau: HPType, kappa: str) -> str:
    return f"{tau.kind}P^{tau.ell}_{kappa}"


def _factor(tau: HPType) -> str:
    return "S^3_{r=1/2}" if tau.kind == "S3" else _projective(tau, "1")


def isometry_type_name(d: LtsDescriptor) -> str:
    """Global isometry type of the totally geodesic submanifolds of type d."""
    family, tau = d.family, d.tau
    if family == "Geo":
        return "R or S^1"
    if family in KAPPA:
        radius = {"P0": "1/2", "P12": "sqrt(5)/2", "P44": "1/sqrt(2)"}[family]
        kappa = {"P0": "1", "P12": "1/5", "P44": "1/2"}[family]
        return f"S^3_{{r={radius}}}" if tau.kind == "S3" else _projective(tau, kappa)
    if family == "S13":
        return f"S^{d.ell}_{{r=sqrt(10)/2}}"
    if family == "S5":
        return "S^5_{r=1/sqrt(2)}"
    if family == "G2":
        return f"G_2({tau.kind}^{tau.ell + 2})"
    if family == "PxP":
        return f"{_factor(tau)} x {_factor(d.tau2)}"
    if family == "S1xS5":
        return f"(S^1_{{r=1/sqrt(2)}} x S^{d.ell}_{{r=1/sqrt(2)}})/{{+-id}}"
    return {"Sp2": "Sp(2)", "Q3": "G_2^+(R^5)"}[family]


def _curvature(d: LtsDescriptor) -> Tuple[Optional[float], bool]:
    if d.family in KAPPA:
        kappa = KAPPA[d.family]
        # S3 and the projective lines are round spheres of curvature 4 kappa
        if d.tau.kind == "S3" or (d.tau.kind in ("C", "H") and d.tau.ell == 1):
            return 4.0 * kappa, True
        return kappa, d.tau.kind == "R" and d.tau.ell >= 2
    if d.family == "S13":
        return 0.4, True
    if d.family == "S5":
        return 2.0, True
    return None, False


def _diameter(d: LtsDescriptor) -> Optional[float]:
    if d.family == "S13":
        return float(np.pi * np.sqrt(10.0) / 2.0)
    if d.family == "P12":
        return float(np.pi * np.sqrt(5.0) / 2.0)
    return None


def type_facts(d: LtsDescriptor, n: int) -> TypeFacts:
    """
    Table entry for ``d`` at ``n``.

    Raises:
        DescriptorError: if the type does not exist at this n
    """
    d.validate(n)
    curvature, constant = _curvature(d)
    return TypeFacts(
        descriptor=d,
        n=n,
        dim=d.dimension(),
        dim_formula=DIM_FORMULAS[d.family],
        rank=d.rank(),
        maximal=container_of(d, n) == MAXIMAL,
        maximal_condition=MAXIMAL_CONDITIONS[d.family],
        isometry_type_name=isometry_type_name(d),
        curvature=curvature,
        constant_curvature=constant,
        diameter=_diameter(d),
    )


def _tau(kind: str, ell: int) -> HPType:
    return HPType(kind, ell)


def container_of(d: LtsDescriptor, n: int) -> Container:
    """
    The type of a Lie triple system containing every LTS of type ``d``.

    Returns:
        A descriptor, MAXIMAL for maximal types, or FULL for G2((H, n)) = m
    """
    d.validate(n)
    family, tau = d.family, d.tau
    tau_of = LtsDescriptor.with_tau

    if family == "Geo":
        return LtsDescriptor.product(_tau("R", 1), _tau("R", 1))
    if family == "P0":
        return MAXIMAL if tau == _tau("H", n) else tau_of("P0", _tau("H", n))
    if family == "S13":
        return LtsDescriptor.plain("Sp2")
    if family == "P12":
        if tau.kind == "S3":
            return MAXIMAL if n == 4 else tau_of("P12", _tau("H", 1))
        if tau.kind == "H":
            if n == 5:
                return MAXIMAL if tau.ell == 2 else tau_of("P12", _tau("H", 2))
            return tau_of("G2", _tau("H", 5))
        return tau_of("G2", _tau(tau.kind, tau.ell + tau.width))
    if family == "P44":
        return LtsDescriptor.product(tau, tau)
    if family == "S5":
        return LtsDescriptor.with_ell("S1xS5", 5)
    if family == "G2":
        if tau.kind == "H":
            if tau.ell == n:
                return FULL
            return MAXIMAL if tau.ell == n - 1 else tau_of("G2", _tau("H", n - 1))
        if tau.ell < n:
            return tau_of("G2", _tau(tau.kind, n))
        return tau_of("G2", _tau("C", n)) if tau.kind == "R" else MAXIMAL
    if family == "PxP":
        first, second = d.tau, d.tau2
        if first.kind != "H" or second.kind != "H":
            return LtsDescriptor.product(_tau("H", first.dim), _tau("H", second.dim))
        if first.ell + second.ell == n:
            return MAXIMAL
        return LtsDescriptor.product(first, _tau("H", n - first.ell))
    if family == "S1xS5":
        if d.ell < 5:
            return LtsDescriptor.with_ell("S1xS5", 5)
        return MAXIMAL if n == 2 else tau_of("G2", _tau("H", 2))
    if family == "Sp2":
        return MAXIMAL if n == 2 else tau_of("G2", _tau("H", 2))
    # Q3
    return tau_of("G2", _tau("C", 2))


def is_maximal(d: LtsDescriptor, n: int) -> bool:
    return container_of(d, n) == MAXIMAL


def _sign_flip(n: int) -> IsotropyElement:
    """(id, diag(1, -1, 1, ..., 1))."""
    b2 = qeye(n)
    b2[1, 1, 0] = -1.0
    return IsotropyElement(qeye(2), b2)


def containment_witness(inner: LtsDescriptor, n: int) -> Tuple[RealSubspace, RealSubspace]:
    """
    Concrete ``(S_inner, S_outer)`` with S_inner contained in S_outer.

    Both are built in the standard frame.  S13 sits in j . Sp2, so the
    container is moved by (id, j I); S5 is moved by (id, diag(1, -1, 1, ...))
    into S1xS5(5).

    Raises:
        DomainError: if ``inner`` is maximal
        ConstructionError: if the constructed pair is not nested
    """
    outer = container_of(inner, n)
    if not isinstance(outer, LtsDescriptor):
        raise DomainError(f"{inner} is {outer} at n={n}; there is no containing type")
    s_inner, s_outer = construct(inner, n), construct(outer, n)
    if inner.family == "S13":
        s_outer = apply_isotropy(s_outer, scalar_isotropy(n, b2=UNIT_J))
    elif inner.family == "S5":
        s_inner = apply_isotropy(s_inner, _sign_flip(n))
    residual = max((s_outer.residual(v) for v in s_inner.vectors()), default=0.0)
    if not s_outer.contains(s_inner):
        raise ConstructionError(f"{inner} is not contained in {outer} at n={n}", residual)
    logger.debug(f"{inner} inside {outer} at n={n}, residual {residual:.3e}")
    return s_inner, s_outer


def hp_types(max_dim: int, include_s3: bool = True) -> List[HPType]:
    """All HP-types of dimension at most ``max_dim``."""
    types = [HPType("S3", 1)] if include_s3 and max_dim >= 1 else []
    types.extend(HPType(kind, ell) for kind in ("R", "C", "H") for ell in range(1, max_dim + 1))
    return types


def valid_descriptors(n: int, geo_angles: Iterable[float] = (0.3,)) -> List[LtsDescriptor]:
    """
    One descriptor per type that exists at ``n`` (PxP up to swapping the factors).

    Args:
        n: Quaternionic dimension of V
        geo_angles: Parameters t of the listed Geo types
    """
    candidates: List[LtsDescriptor] = [LtsDescriptor.geo(t) for t in geo_angles]
    for family in ("P0", "P12", "P44"):
        candidates.extend(LtsDescriptor.with_tau(family, tau) for tau in hp_types(min(n, 2) if family == "P12" else n))
    candidates.extend(LtsDescriptor.with_ell("S13", ell) for ell in (2, 3))
    candidates.append(LtsDescriptor.plain("S5"))
    candidates.extend(LtsDescriptor.with_tau("G2", tau) for tau in hp_types(n, include_s3=False))
    types = hp_types(n - 1)
    for a, first in enumerate(types):
        for second in types[a:]:
            candidates.append(LtsDescriptor.product(first, second).canonical())
    candidates.extend(LtsDescriptor.with_ell("S1xS5", ell) for ell in range(2, 6))
    candidates.extend(LtsDescriptor.plain(family) for family in ("Sp2", "Q3"))
    return [d for d in candidates if d.is_valid(n)]


def inclusion_rows(n: int) -> List[Tuple[LtsDescriptor, Container]]:
    """``(type, container)`` for every valid type at n."""
    return [(d, container_of(d, n)) for d in valid_descriptors(n)]
