"""
Product and diagonal embeddings of quaternionic projective spaces.

For an orthogonal splitting H^{n+2} = V1 + V2 the map (p1, p2) -> p1 + p2 is
a totally geodesic embedding HP(V1) x HP(V2) -> G2(H^{n+2}).  Through the
base point V1 = span{e1, f_r : r in R1} and V2 = span{e2, f_r : r in R2}
for the row sets of the PxP constructor.
"""

from dataclasses import dataclass
from typing import List

import numpy as np

from ..constructors.build import shifted_rows
from ..lts.subspace import RealSubspace
from ..model.geodesic import graph_chart
from ..model.tangent import Plane, TangentVector
from ..qlinalg.hptype import HPType
from ..qlinalg.matrix import qdot, qvnorm
from ..qlinalg.quaternion import QBASIS
from ..utils.errors import DescriptorError, ShapeError, ValidationError
from ..utils.logger import logger

STEP = 1e-3


@dataclass(frozen=True)
class ProductSplitting:
    """The splitting H^{n+2} = V1 + V2 with dim V1 = ell1 + 1, dim V2 = ell2 + 1."""

    ell1: int
    ell2: int
    n: int

    def __post_init__(self):
        if self.ell1 < 1 or self.ell2 < 0:
            raise DescriptorError(f"Need ell1 >= 1 and ell2 >= 0, got ({self.ell1}, {self.ell2})")
        if self.ell1 + self.ell2 > self.n:
            raise DescriptorError(f"ell1 + ell2 must not exceed n={self.n}, got {self.ell1 + self.ell2}")

    @property
    def rows1(self) -> List[int]:
        if self.ell2 == 0:
            return list(range(self.ell1))
        return shifted_rows(self.ell1, self.ell2)[0]

    @property
    def rows2(self) -> List[int]:
        if self.ell2 == 0:
            return []
        return shifted_rows(self.ell1, self.ell2)[1]

    @property
    def coords1(self) -> List[int]:
        """Ambient coordinates spanning V1."""
        return [0] + [2 + r for r in self.rows1]

    @property
    def coords2(self) -> List[int]:
        return [1] + [2 + r for r in self.rows2]


def _check_factor(p: np.ndarray, coords: List[int], size: int, name: str) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape != (size, 4):
        raise ShapeError(f"{name} needs shape ({size}, 4), got {p.shape}")
    outside = np.delete(p, coords, axis=0)
    if np.max(np.abs(outside), initial=0.0) > 1e-10:
        raise ValidationError(f"{name} does not lie in its factor of the splitting")
    norm = qvnorm(p)
    if norm == 0.0:
        raise ValidationError(f"{name} is the zero vector")
    return p / norm


def product_embedding(p1: np.ndarray, p2: np.ndarray, splitting: ProductSplitting) -> Plane:
    """
    The plane p1 + p2 for lines p1 in V1 and p2 in V2.

    Args:
        p1: QVector of length n+2 supported on V1
        p2: QVector of length n+2 supported on V2
        splitting: The fixed orthogonal splitting

    Returns:
        Plane spanned by the normalized representatives

    Raises:
        ValidationError: if a representative leaves its factor or the two are not orthogonal
    """
    size = splitting.n + 2
    u1 = _check_factor(p1, splitting.coords1, size, "p1")
    u2 = _check_factor(p2, splitting.coords2, size, "p2")
    if np.max(np.abs(qdot(u1, u2))) > 1e-10:
        raise ValidationError("The splitting is not orthogonal")
    return Plane.spanned_by([u1, u2])


def _direction(size: int, coord: int, q: np.ndarray) -> np.ndarray:
    x = np.zeros((size, 4))
    x[coord] = q
    return x


def _differential(moved: np.ndarray, which: int, splitting: ProductSplitting) -> TangentVector:
    # the chart is affine in the factor coordinates, so the quotient is exact
    size = splitting.n + 2
    e1, e2 = _direction(size, 0, QBASIS[0]), _direction(size, 1, QBASIS[0])
    p1 = e1 + STEP * moved if which == 0 else e1
    p2 = e2 + STEP * moved if which == 1 else e2
    return graph_chart(product_embedding(p1, p2, splitting)) / STEP


def product_tangent(splitting: ProductSplitting, units: np.ndarray = QBASIS) -> RealSubspace:
    """
    Differential of the product embedding at (e1, e2).

    Args:
        splitting: Splitting of H^{n+2}
        units: Entry units of the factors; the full QBASIS gives the HP x HP case

    Returns:
        RealSubspace of dimension len(units) (ell1 + ell2)
    """
    size = splitting.n + 2
    vectors = []
    for which, rows in enumerate((splitting.rows1, splitting.rows2)):
        for r in rows:
            for q in units:
                vectors.append(_differential(_direction(size, 2 + r, q), which, splitting))
    tangent = RealSubspace.from_vectors(vectors, splitting.n)
    logger.debug(f"Product tangent for ({splitting.ell1}, {splitting.ell2}) at n={splitting.n}: dim {tangent.dim}")
    return tangent


def torus_factor_tangent(n: int = 2) -> RealSubspace:
    """Tangent of RP^1 x RP^1 through the base point, spanned by H+ and H-."""
    return product_tangent(ProductSplitting(1, 1, n), units=QBASIS[:1])


def diagonal_tangent(tau: HPType, n: int) -> RealSubspace:
    """
    Tangent space at the base point of p -> f(p, p) on the tau-projective space.

    V1 and V2 are identified by e1 -> e2, f_{R1[m]} -> f_{R2[m]}.

    Raises:
        DescriptorError: if 2 dim(tau) > n
    """
    if 2 * tau.dim > n:
        raise DescriptorError(f"The diagonal needs dim(tau) <= n/2, got {tau} at n={n}")
    splitting = ProductSplitting(tau.ell, tau.ell, n)
    size = n + 2
    e1, e2 = _direction(size, 0, QBASIS[0]), _direction(size, 1, QBASIS[0])
    vectors = []
    for r1, r2 in zip(splitting.rows1, splitting.rows2):
        for q in tau.field_units():
            p1 = e1 + STEP * _direction(size, 2 + r1, q)
            p2 = e2 + STEP * _direction(size, 2 + r2, q)
            vectors.append(graph_chart(product_embedding(p1, p2, splitting)) / STEP)
    tangent = RealSubspace.from_vectors(vectors, n)
    logger.debug(f"Diagonal tangent for {tau} at n={n}: dim {tangent.dim}")
    return tangent
