"""
Restricted roots of a Lie triple system.

A Cartan subalgebra a' of S is extended to an ambient Cartan a through the
canonical representation of a regular element.  Restricted roots are read
off the Jacobi spectrum on S; every root space of S is matched against the
ambient roots whose restriction to a' has the same value.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from .subspace import RealSubspace
from .verify import cartan_of, rank_of
from ..cartan.angles import canonical_representation, char_angle
from ..cartan.frame import Frame, RootDatum, RootLabel, root_data, root_sharp
from ..cartan.spectrum import cluster_eigenvalues, jacobi_operator
from ..config.manager import resolve_tol
from ..model.tangent import TangentVector
from ..qlinalg.quaternion import QBASIS, qmul
from ..utils.errors import DomainError
from ..utils.logger import logger

# angle of the test direction cos(t) H+ + sin(t) H- used for rank 2
RANK2_TEST_ANGLE = 0.3
MATCH_TOL = 1e-6


@dataclass(frozen=True)
class RestrictedRootDatum:
    """A positive restricted root with its root space in S."""

    value: float
    multiplicity: int
    labels: Tuple[RootLabel, ...]
    components: Dict[str, float] = field(compare=False)
    decomposition_residual: float = field(compare=False)
    sharp_residual: Optional[float] = field(default=None, compare=False)
    basis: np.ndarray = field(default=None, compare=False, repr=False)

    @property
    def elementary(self) -> bool:
        return len(self.labels) == 1

    @property
    def kind(self) -> str:
        return "elementary" if self.elementary else "composite"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "multiplicity": self.multiplicity,
            "kind": self.kind,
            "ambient": [label.key for label in self.labels],
            "components": dict(self.components),
        }


@dataclass(frozen=True)
class RestrictedRootSystem:
    """Restricted roots of S together with the frame they were computed in."""

    rank: int
    frame: Frame
    test_vector: TangentVector
    cartan: RealSubspace
    roots: List[RestrictedRootDatum]

    @property
    def multiplicities(self) -> Dict[str, int]:
        """Multiplicity per ambient label for elementary roots (rank 2)."""
        return {r.labels[0].key: r.multiplicity for r in self.roots if r.elementary}


def _regular_in(cartan: RealSubspace) -> TangentVector:
    """Element of a 2-dimensional a' whose characteristic angle is farthest from 0 and pi/4."""
    best, best_score = None, -1.0
    for theta in np.linspace(0.0, np.pi, 24, endpoint=False):
        v = cartan.vector([np.cos(theta), np.sin(theta)])
        phi = char_angle(v)
        score = min(phi, np.pi / 4 - phi)
        if score > best_score:
            best, best_score = v, score
    return best


def extend_cartan(subspace: RealSubspace, tol: Optional[float] = None) -> Tuple[int, Frame, TangentVector, RealSubspace]:
    """
    Rank, ambient frame with a' contained in a, test vector and a'.

    Raises:
        DomainError: for a non-LTS or a rank-2 system without a regular element
    """
    rank = rank_of(subspace, tol)
    if rank == 0:
        raise DomainError("The zero subspace has no restricted roots")
    cartan = cartan_of(subspace, tol)
    if rank == 1:
        h = cartan.vectors()[0]
        frame = canonical_representation(h).frame
        return rank, frame, h, cartan
    v = _regular_in(cartan)
    frame = canonical_representation(v / v.norm()).frame
    angle = RANK2_TEST_ANGLE
    h = frame.h_plus * np.cos(angle) + frame.h_minus * np.sin(angle)
    return rank, frame, h, cartan


def restricted_root_system(subspace: RealSubspace, tol: Optional[float] = None) -> RestrictedRootSystem:
    """
    Compute the restricted root system of a Lie triple system.

    Args:
        subspace: A Lie triple system
        tol: Membership tolerance

    Returns:
        RestrictedRootSystem with positive roots sorted by value
    """
    tol = resolve_tol(tol)
    rank, frame, h, cartan = extend_cartan(subspace, tol)
    ambient = {d.label: d for d in root_data(frame)}

    op = jacobi_operator(h, subspace)
    values, vectors = np.linalg.eigh(op)
    clusters = cluster_eigenvalues(values, resolve_tol(None, "cluster"))
    roots: List[RestrictedRootDatum] = []
    start = 0
    for value, mult in clusters:
        idx = slice(start, start + mult)
        start += mult
        if value <= MATCH_TOL:
            continue
        alpha = float(np.sqrt(value))
        coords = vectors[:, idx].T
        basis = (coords @ subspace.flat).reshape(mult, subspace.n, 2, 4)
        labels = tuple(
            label for label in ambient if abs(abs(label.value_at(frame, h)) - alpha) <= MATCH_TOL
        )
        if not labels:
            logger.warning(f"Restricted root value {alpha:.9f} is not a restriction of an ambient root")
        roots.append(_root_datum(alpha, basis, labels, ambient, frame, cartan))
    roots.sort(key=lambda r: r.value)
    logger.debug(f"Restricted roots: {[(r.value, r.multiplicity, r.kind) for r in roots]}")
    return RestrictedRootSystem(rank, frame, h, cartan, roots)


def _root_datum(
    alpha: float,
    basis: np.ndarray,
    labels: Tuple[RootLabel, ...],
    ambient: Dict[RootLabel, RootDatum],
    frame: Frame,
    cartan: RealSubspace,
) -> RestrictedRootDatum:
    flat = basis.reshape(basis.shape[0], -1)
    mult = flat.shape[0]
    components = {}
    total = np.zeros_like(flat)
    for label in labels:
        projected = flat @ ambient[label].projector()
        components[label.key] = float(np.sum(projected * flat) / mult)
        total += projected
    residual = float(np.max(np.linalg.norm(flat - total, axis=1))) if labels else 1.0
    sharp_residual = None
    if len(labels) == 1:
        sharp = root_sharp(labels[0], frame)
        sharp_residual = cartan.residual(sharp) / sharp.norm()
    return RestrictedRootDatum(alpha, mult, labels, components, residual, sharp_residual, basis)


def restricted_roots(subspace: RealSubspace, tol: Optional[float] = None) -> List[RestrictedRootDatum]:
    """Positive restricted roots of S; empty for flat S."""
    return restricted_root_system(subspace, tol).roots


@dataclass(frozen=True)
class SubfieldReport:
    """K = {c : H+ . c in S} and the K-invariance of the lambda1 root space of S."""

    units: np.ndarray
    closed: bool
    invariant: bool
    residual: float

    @property
    def dim(self) -> int:
        return self.units.shape[0]


def subfield_check(subspace: RealSubspace, tol: Optional[float] = None) -> Optional[SubfieldReport]:
    """
    For a rank-2 system with lambda1 among its roots, check that K is a sub-field.

    Returns:
        SubfieldReport, or None when the rank is 1 or lambda1 is not a root
    """
    tol = resolve_tol(tol)
    system = restricted_root_system(subspace, tol)
    if system.rank != 2:
        return None
    frame = system.frame
    lambda1 = [r for r in system.roots if r.labels == (RootLabel.LAMBDA1,)]
    if not lambda1:
        return None

    lines = np.array([frame.h_plus_times(q).flat for q in QBASIS])
    rest = lines - (lines @ subspace.flat.T) @ subspace.flat
    _, s, vt = np.linalg.svd(rest.T)
    units = vt[int(np.sum(s > tol)):]

    def in_k(c: np.ndarray) -> float:
        return float(np.linalg.norm(c - units.T @ (units @ c)))

    worst = 0.0
    for p in units:
        for q in units:
            worst = max(worst, in_k(qmul(p, q)))
    closed = worst <= tol

    moved = 0.0
    for v in lambda1[0].basis:
        for c in units:
            moved = max(moved, subspace.residual(frame.values_times(TangentVector(v), c)))
    invariant = moved <= tol
    return SubfieldReport(units, closed, invariant, max(worst, moved))
