"""
The Sp(2) component of the centrosome between U = V' and its pole U^perp.
"""

from typing import List

import numpy as np

from .report import EmbeddingReport, make_report
from ..constructors.descriptor import LtsDescriptor
from ..lts.subspace import RealSubspace
from ..model.geodesic import ambient_exp, ambient_generator, geodesic_at, plane_intersection_dim
from ..model.tangent import Plane, TangentVector
from ..qlinalg.matrix import qadjoint, qeye, qmatmul
from ..qlinalg.quaternion import QBASIS, qconj
from ..utils.errors import ConstructionError, DomainError
from ..utils.logger import logger


def sp2_basis() -> List[np.ndarray]:
    """Real basis of sp(2) as ``(2, 2, 4)`` skew-Hermitian quaternion matrices."""
    basis = []
    for a in range(2):
        for q in QBASIS[1:]:
            y = np.zeros((2, 2, 4))
            y[a, a] = q
            basis.append(y)
    for q in QBASIS:
        y = np.zeros((2, 2, 4))
        y[0, 1] = q
        y[1, 0] = -qconj(q)
        basis.append(y)
    return basis


def isotropy_algebra(n: int = 2) -> List[np.ndarray]:
    """sp(2) + sp(n) embedded block diagonally in sp(n + 2)."""
    if n != 2:
        raise DomainError(f"The Sp2 centrosome needs n = 2, got {n}")
    out = []
    for offset in (0, 2):
        for y in sp2_basis():
            x = np.zeros((4, 4, 4))
            x[offset:offset + 2, offset:offset + 2] = y
            out.append(x)
    return out


def centrosome_check(n: int = 2) -> EmbeddingReport:
    """
    Orbit of the isotropy group of U through the midpoint U' between U and U^perp.

    U' = span{e1 + f1, e2 + f2} / sqrt2 = exp((pi/4) X) U for the tangent
    vector v = E11 + E22.  The orbit tangent at U' is moved back to U by
    exp(-(pi/4) X); its m-part is the lower-left block.

    Raises:
        DomainError: if n != 2
        ConstructionError: if U' is not the midpoint of the geodesic from U to U^perp
    """
    generators = isotropy_algebra(n)
    v = TangentVector.from_entries(n, {(0, 0): QBASIS[0], (1, 1): QBASIS[0]})

    center = np.zeros((4, 2, 4))
    center[[0, 2], 0, 0] = center[[1, 3], 1, 0] = 1.0 / np.sqrt(2.0)
    pole = np.zeros((4, 2, 4))
    pole[2, 0, 0] = pole[3, 1, 0] = 1.0
    midpoint = plane_intersection_dim(geodesic_at(v, np.pi / 4), Plane(center))
    antipode = plane_intersection_dim(geodesic_at(v, np.pi / 2), Plane(pole))
    if midpoint != 2 or antipode != 2:
        raise ConstructionError(f"Geodesic check failed: midpoint {midpoint}, pole {antipode}")

    g = ambient_exp((np.pi / 4) * ambient_generator(v))
    g_inv = qadjoint(g)
    vectors = []
    for y in generators:
        moved = qmatmul(qmatmul(g_inv, y), g)
        vectors.append(TangentVector(moved[2:, :2]))
    tangent = RealSubspace.from_vectors(vectors, n)
    unitarity = float(np.max(np.abs(qmatmul(g_inv, g) - qeye(4))))
    logger.debug(f"Centrosome orbit tangent dim {tangent.dim}, unitarity defect {unitarity:.3e}")
    return make_report(LtsDescriptor.plain("Sp2"), tangent, {"unitarity": unitarity})
