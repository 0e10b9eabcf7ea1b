"""
Characteristic angle, canonical representation and isotropy between orbits.

Every nonzero v in m can be written v = |v| (cos(phi) H+ + sin(phi) H-)
for some frame; phi in [0, pi/4] is determined by the eigenvalues
|v|^2 cos^2(phi), |v|^2 sin^2(phi) of v* v.
"""

from typing import NamedTuple, Optional

import numpy as np

from .frame import Frame, apply_map, outer
from ..config.manager import resolve_tol
from ..model.curvature import isotropy_act
from ..model.tangent import IsotropyElement, TangentVector
from ..qlinalg.matrix import (
    basis_vector,
    gram_schmidt_H,
    hermitian2_eigs,
    qadjoint,
    qdot,
    qhermitian_eigh,
    qmatmul,
    right_scale,
)
from ..qlinalg.quaternion import qconj
from ..utils.errors import DomainError, ValidationError
from ..utils.logger import logger


class CanonicalForm(NamedTuple):
    """Result of :func:`canonical_representation`."""

    frame: Frame
    norm: float
    phi: float
    non_canonical: bool


def _gram(v: TangentVector) -> np.ndarray:
    return qmatmul(qadjoint(v.matrix), v.matrix)


def char_angle(v: TangentVector) -> float:
    """
    Characteristic angle of a nonzero tangent vector.

    Returns:
        phi in [0, pi/4]
    """
    if v.norm() == 0.0:
        raise DomainError("The characteristic angle of the zero vector is undefined")
    vv = _gram(v)
    big, small = hermitian2_eigs(vv[0, 0, 0], vv[1, 1, 0], vv[0, 1])
    return float(np.arctan(np.sqrt(max(small, 0.0) / big)))


def _normalize_phase(e: np.ndarray) -> np.ndarray:
    # make the largest coordinate real and positive
    k = int(np.argmax(np.sum(e ** 2, axis=1)))
    q = e[k] / np.linalg.norm(e[k])
    return right_scale(e, qconj(q))


def canonical_representation(v: TangentVector, tol: Optional[float] = None) -> CanonicalForm:
    """
    Frame with v = |v| (cos(phi) H+ + sin(phi) H-).

    At phi = pi/4 every unit vector of V' is an eigenvector of v*v and e+ = e1
    is used.  At phi = 0 the direction H- is not determined by v; it is then
    completed by the first standard vector orthogonal to H+(e+) and the
    result is flagged as a non-canonical completion.

    Args:
        v: Nonzero tangent vector
        tol: Relative tolerance for ties and vanishing eigenvalues

    Returns:
        CanonicalForm(frame, norm, phi, non_canonical)
    """
    tol = resolve_tol(tol)
    norm = v.norm()
    if norm == 0.0:
        raise DomainError("The zero vector has no canonical representation")
    n = v.n
    vv = _gram(v)
    big, small = hermitian2_eigs(vv[0, 0, 0], vv[1, 1, 0], vv[0, 1])
    small = max(small, 0.0)

    if big - small <= tol * norm ** 2:
        e_plus, e_minus = basis_vector(2, 0), basis_vector(2, 1)
    else:
        _, vecs = qhermitian_eigh(vv, tol)
        e_plus = _normalize_phase(vecs[0])
        # e- = J e+ for the J of the adapted basis; any unit vector orthogonal to e+ works
        e_minus = _normalize_phase(vecs[1])

    # |v e-| is accurate to eps |v|; sqrt(small) only to sqrt(eps) |v|
    x_plus = apply_map(v.matrix, e_plus)
    cos_part = float(np.linalg.norm(x_plus))
    h_plus = x_plus / cos_part
    x_minus = apply_map(v.matrix, e_minus)
    x_minus = x_minus - right_scale(h_plus, qdot(h_plus, x_minus))
    sin_part = float(np.linalg.norm(x_minus))
    non_canonical = sin_part <= 0.5 * tol * norm
    if non_canonical:
        cols = [h_plus] + [basis_vector(n, k) for k in range(n)]
        h_minus = gram_schmidt_H(cols, 1e-6)[1]
        phi = 0.0
        logger.debug("Zero characteristic angle: H- completed non-canonically")
    else:
        h_minus = x_minus / sin_part
        phi = float(min(np.arctan2(sin_part, cos_part), np.pi / 4))

    frame = Frame.from_basis(
        e_plus,
        e_minus,
        TangentVector(outer(h_plus, e_plus)),
        TangentVector(outer(h_minus, e_minus)),
        tol=max(tol, 1e-8),
    )
    rebuilt = (frame.h_plus * np.cos(phi) + frame.h_minus * np.sin(phi)) * norm
    residual = (rebuilt - v).norm()
    if residual > tol * max(1.0, norm):
        raise ValidationError(f"Canonical representation failed to reconstruct v (residual {residual:.3e})")
    return CanonicalForm(frame, norm, phi, bool(non_canonical))


def _completion(first: np.ndarray, second: np.ndarray, n: int) -> np.ndarray:
    cols = [first, second] + [basis_vector(n, k) for k in range(n)]
    basis = gram_schmidt_H(cols, 1e-6)
    return np.stack(basis, axis=1)


def isotropy_between(u: TangentVector, v: TangentVector, tol: Optional[float] = None) -> IsotropyElement:
    """
    An isotropy element g with g u = v.

    Args:
        u, v: Tangent vectors of equal norm and equal characteristic angle

    Raises:
        DomainError: when the norms or characteristic angles differ
        ValidationError: when the element found does not carry u to v
    """
    tol = resolve_tol(tol)
    if abs(u.norm() - v.norm()) > tol * max(1.0, u.norm()):
        raise DomainError("Vectors of different norm lie in different isotropy orbits")
    cu = canonical_representation(u, tol)
    cv = canonical_representation(v, tol)
    if abs(cu.phi - cv.phi) > np.sqrt(tol):
        raise DomainError(f"Characteristic angles differ: {cu.phi:.9f} vs {cv.phi:.9f}")

    def adapted(frame: Frame) -> np.ndarray:
        return np.stack([frame.e_plus, frame.e_minus], axis=1)

    b1 = qmatmul(adapted(cv.frame), qadjoint(adapted(cu.frame)))
    qu = _completion(cu.frame.image_plus, cu.frame.image_minus, u.n)
    qv = _completion(cv.frame.image_plus, cv.frame.image_minus, v.n)
    b2 = qmatmul(qv, qadjoint(qu))
    g = IsotropyElement(b1, b2, tol=1e-8)
    residual = (isotropy_act(g, u) - v).norm()
    logger.debug(f"isotropy_between residual {residual:.3e}")
    if residual > tol * max(1.0, v.norm()):
        raise ValidationError(f"Isotropy element does not carry u to v (residual {residual:.3e})")
    return g
