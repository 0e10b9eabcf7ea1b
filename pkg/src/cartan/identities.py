"""
Closed forms for the curvature between root spaces.

Each helper draws random parameters and returns ``(lhs, rhs)`` where lhs is
computed with :func:`~src.model.curvature.curvature` and rhs is the closed
form.  ``H+ . q`` denotes the map e+ -> h+ q, e- -> 0 and ``J(w) . q`` the map
e -> w(J e) q on the adapted basis.
"""

from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .frame import Frame, RootLabel, m_vector, root_data
from ..model.curvature import curvature
from ..model.tangent import TangentVector
from ..qlinalg.matrix import qdot
from ..qlinalg.quaternion import qconj, qim, qmul, qre

Pair = Tuple[TangentVector, TangentVector]
SQRT2 = np.sqrt(2.0)


def random_quaternion(rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal(4)


def random_imaginary(rng: np.random.Generator) -> np.ndarray:
    q = rng.standard_normal(4)
    q[0] = 0.0
    return q


def random_root_vector(frame: Frame, label: RootLabel, rng: np.random.Generator) -> Optional[TangentVector]:
    """Random element of m_lambda, or None when the root space is zero."""
    for datum in root_data(frame):
        if datum.label == label:
            coefficients = rng.standard_normal(datum.multiplicity)
            return TangentVector(np.tensordot(coefficients, datum.basis, axes=1))
    return None


def _eps(rng: np.random.Generator) -> int:
    return int(rng.choice([-1, 1]))


def cartan_on_own_root(frame: Frame, rng: np.random.Generator) -> List[Pair]:
    """R(H+, u+)v+ = H+ . <u+(e+), v+(e+)> and the same for H-, lambda2."""
    pairs = []
    for label, h, side, times in (
        (RootLabel.LAMBDA1, frame.h_plus, 0, frame.h_plus_times),
        (RootLabel.LAMBDA2, frame.h_minus, 1, frame.h_minus_times),
    ):
        u = random_root_vector(frame, label, rng)
        v = random_root_vector(frame, label, rng)
        if u is None:
            continue
        q = qdot(frame.values(u)[side], frame.values(v)[side])
        pairs.append((curvature(h, u, v), times(q)))
    return pairs


def cartan_m_on_other_root(frame: Frame, rng: np.random.Generator) -> List[Pair]:
    """
    R(H-, M_{c,eps}) w+ = -J(w+) . conj(c) / sqrt2 for w+ in m_lambda1 and
    R(H+, M_{c,eps}) w- = eps J(w-) . c / sqrt2 for w- in m_lambda2.
    """
    c, eps = random_quaternion(rng), _eps(rng)
    m = m_vector(frame, c, eps)
    pairs = []
    w_plus = random_root_vector(frame, RootLabel.LAMBDA1, rng)
    if w_plus is not None:
        rhs = frame.values_times(frame.j_of(w_plus), qconj(c)) * (-1.0 / SQRT2)
        pairs.append((curvature(frame.h_minus, m, w_plus), rhs))
    w_minus = random_root_vector(frame, RootLabel.LAMBDA2, rng)
    if w_minus is not None:
        rhs = frame.values_times(frame.j_of(w_minus), c) * (eps / SQRT2)
        pairs.append((curvature(frame.h_plus, m, w_minus), rhs))
    return pairs


def root_pair_on_m(frame: Frame, rng: np.random.Generator) -> List[Pair]:
    """
    R(u+, v+) M_{c,eps} = M_{c d+, -eps} + M_{c d+, eps} and
    R(u-, v-) M_{c,eps} = M_{d- c, -eps} - M_{d- c, eps}
    with d+- = Im <v+-(e+-), u+-(e+-)>.
    """
    c, eps = random_quaternion(rng), _eps(rng)
    m = m_vector(frame, c, eps)
    pairs = []
    u = random_root_vector(frame, RootLabel.LAMBDA1, rng)
    v = random_root_vector(frame, RootLabel.LAMBDA1, rng)
    if u is not None:
        d = qim(qdot(frame.values(v)[0], frame.values(u)[0]))
        cd = qmul(c, d)
        pairs.append((curvature(u, v, m), m_vector(frame, cd, -eps) + m_vector(frame, cd, eps)))
    u = random_root_vector(frame, RootLabel.LAMBDA2, rng)
    v = random_root_vector(frame, RootLabel.LAMBDA2, rng)
    if u is not None:
        d = qim(qdot(frame.values(v)[1], frame.values(u)[1]))
        dc = qmul(d, c)
        pairs.append((curvature(u, v, m), m_vector(frame, dc, -eps) - m_vector(frame, dc, eps)))
    return pairs


def cartan_line_on_m(frame: Frame, rng: np.random.Generator) -> List[Pair]:
    """R(H+, H+ . d) M_{c,eps} = M_{-2cd, -eps}; R(H-, H- . d) M_{c,eps} = M_{-2dc, -eps}."""
    c, d, eps = random_quaternion(rng), random_imaginary(rng), _eps(rng)
    m = m_vector(frame, c, eps)
    return [
        (curvature(frame.h_plus, frame.h_plus_times(d), m), m_vector(frame, -2.0 * qmul(c, d), -eps)),
        (curvature(frame.h_minus, frame.h_minus_times(d), m), m_vector(frame, -2.0 * qmul(d, c), -eps)),
    ]


def cartan_line_m_on_opposite_m(frame: Frame, rng: np.random.Generator) -> List[Pair]:
    """
    R(H+ . d, M_{c,eps}) M_{c~,-eps} = Re(d c* c~) H+ - eps Re(c d c~*) H- and
    R(H- . d, M_{c,eps}) M_{c~,-eps} = eps Re(c* d c~) H+ + Re(c~ c* d) H-,
    with * the quaternionic conjugate.
    """
    c, ct, d, eps = random_quaternion(rng), random_quaternion(rng), random_imaginary(rng), _eps(rng)
    m, mt = m_vector(frame, c, eps), m_vector(frame, ct, -eps)
    cb, ctb = qconj(c), qconj(ct)
    plus_rhs = frame.h_plus * float(qre(qmul(qmul(d, cb), ct))) - frame.h_minus * (
        eps * float(qre(qmul(qmul(c, d), ctb)))
    )
    minus_rhs = frame.h_plus * (eps * float(qre(qmul(qmul(cb, d), ct)))) + frame.h_minus * float(
        qre(qmul(qmul(ct, cb), d))
    )
    return [
        (curvature(frame.h_plus_times(d), m, mt), plus_rhs),
        (curvature(frame.h_minus_times(d), m, mt), minus_rhs),
    ]


def mixed_pair_on_a(frame: Frame, rng: np.random.Generator) -> List[Pair]:
    """R(u+, v-)(-eps H+ + H-) = sqrt2 M_{<v-(e-), u+(e+)>, eps}."""
    u = random_root_vector(frame, RootLabel.LAMBDA1, rng)
    v = random_root_vector(frame, RootLabel.LAMBDA2, rng)
    if u is None or v is None:
        return []
    eps = _eps(rng)
    w = frame.h_minus - frame.h_plus * eps
    q = qdot(frame.values(v)[1], frame.values(u)[0])
    return [(curvature(u, v, w), m_vector(frame, q, eps) * SQRT2)]


def cartan_m_on_opposite_m(frame: Frame, rng: np.random.Generator) -> List[Pair]:
    """R(H+, M_{c,1}) M_{c~,-1} = H+ . Im(c* c~) - H- . Im(c~ c*)."""
    c, ct = random_quaternion(rng), random_quaternion(rng)
    lhs = curvature(frame.h_plus, m_vector(frame, c, 1), m_vector(frame, ct, -1))
    rhs = frame.h_plus_times(qim(qmul(qconj(c), ct))) - frame.h_minus_times(qim(qmul(ct, qconj(c))))
    return [(lhs, rhs)]


IDENTITIES: Dict[str, Callable[[Frame, np.random.Generator], List[Pair]]] = {
    "cartan_on_own_root": cartan_on_own_root,
    "cartan_m_on_other_root": cartan_m_on_other_root,
    "root_pair_on_m": root_pair_on_m,
    "cartan_line_on_m": cartan_line_on_m,
    "cartan_line_m_on_opposite_m": cartan_line_m_on_opposite_m,
    "mixed_pair_on_a": mixed_pair_on_a,
    "cartan_m_on_opposite_m": cartan_m_on_opposite_m,
}


def identity_residuals(frame: Frame, draws: int = 100, seed: int = 0) -> Dict[str, float]:
    """
    Largest relative residual of each closed form over random draws.

    Args:
        frame: Adapted frame
        draws: Number of parameter draws per identity
        seed: Seed for the parameter generator

    Returns:
        ``{name: residual}``; identities needing lambda1/lambda2 report 0.0 when n = 2
    """
    rng = np.random.default_rng(seed)
    residuals = {}
    for name, identity in IDENTITIES.items():
        worst = 0.0
        for _ in range(draws):
            for lhs, rhs in identity(frame, rng):
                worst = max(worst, (lhs - rhs).norm() / max(1.0, rhs.norm()))
        residuals[name] = worst
    return residuals
