"""
The exotic HP^2 inside G2(H^7) built from the third exterior power of C^6.

W = C^6 carries the anti-unitary tau with tau^2 = -id, so W is H^3 and
Sp(W, tau) = Sp(3).  Lambda^3 W is complex 20-dimensional with the induced
anti-linear tau3; V = (W ^ omega)^perp is tau3-invariant and hence a
quaternionic 7-space.  The Sp(3)-orbit of U = W2 ^ eta in G2(V) is a totally
geodesic HP^2 of type P12((H, 2)).  Restricting to SU(3) and SO(3) gives the
CP^2 and RP^2 of types P12((C, 2)) and P12((R, 2)).

Vectors of Lambda^3 W are coordinate arrays over the lexicographic basis
wedges b_i ^ b_j ^ b_k (i < j < k) of the basis b1, b2, b3, tau b1, tau b2,
tau b3, indices 0..5.  Coordinates of a decomposable wedge are the 3x3
minors, so the coordinate inner product is the Gram determinant.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import numpy as np
from scipy.linalg import expm, null_space, orth
from scipy.stats import special_ortho_group

from .report import EmbeddingReport, make_report
from ..constructors.descriptor import LtsDescriptor
from ..lts.subspace import RealSubspace
from ..model.tangent import TangentVector
from ..qlinalg.hptype import HPType
from ..utils.errors import ConstructionError
from ..utils.logger import logger

PAIRS: Tuple[Tuple[int, int], ...] = tuple(combinations(range(6), 2))
TRIPLES: Tuple[Tuple[int, int, int], ...] = tuple(combinations(range(6), 3))
TRIPLE_ARRAY = np.array(TRIPLES)

# W = W2 + W1 with W2 = span{b1, b2}, W1 = span{b3} (and their tau images)
W2_INDEX = [0, 1, 3, 4]
W1_INDEX = [2, 5]

WEDGE_TOL = 1e-9
SQRT2 = np.sqrt(2.0)


def tau_matrix() -> np.ndarray:
    """The real matrix T with tau(z) = T conj(z): b_k -> tau b_k -> -b_k."""
    t = np.zeros((6, 6))
    for k in range(3):
        t[k + 3, k] = 1.0
        t[k, k + 3] = -1.0
    return t


def basis_vector(k: int) -> np.ndarray:
    e = np.zeros(6, dtype=complex)
    e[k] = 1.0
    return e


def wedge2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Coordinates of a ^ b over the 15 basis pairs."""
    return np.array([a[i] * b[j] - a[j] * b[i] for i, j in PAIRS], dtype=complex)


def wedge3(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Coordinates of a ^ b ^ c: the 3x3 minors of [a b c]."""
    m = np.stack([np.asarray(a), np.asarray(b), np.asarray(c)], axis=1).astype(complex)
    return np.linalg.det(m[TRIPLE_ARRAY])


def wedge_vector_form(v: np.ndarray, beta: np.ndarray) -> np.ndarray:
    """Coordinates of v ^ beta for a vector v and a 2-form beta."""
    pair = {p: k for k, p in enumerate(PAIRS)}
    out = np.zeros(len(TRIPLES), dtype=complex)
    for t, (i, j, k) in enumerate(TRIPLES):
        out[t] = v[i] * beta[pair[j, k]] - v[j] * beta[pair[i, k]] + v[k] * beta[pair[i, j]]
    return out


def induced(b: np.ndarray) -> np.ndarray:
    """Matrix of B^(3) on Lambda^3 W."""
    b = np.asarray(b, dtype=complex)
    out = np.zeros((len(TRIPLES), len(TRIPLES)), dtype=complex)
    for col, t in enumerate(TRIPLES):
        out[:, col] = wedge3(b[:, t[0]], b[:, t[1]], b[:, t[2]])
    return out


def derivation(x: np.ndarray) -> np.ndarray:
    """Matrix of Phi_L(X): w1^w2^w3 -> Xw1^w2^w3 + w1^Xw2^w3 + w1^w2^Xw3."""
    x = np.asarray(x, dtype=complex)
    out = np.zeros((len(TRIPLES), len(TRIPLES)), dtype=complex)
    for col, (i, j, k) in enumerate(TRIPLES):
        ei, ej, ek = basis_vector(i), basis_vector(j), basis_vector(k)
        out[:, col] = wedge3(x[:, i], ej, ek) + wedge3(ei, x[:, j], ek) + wedge3(ei, ej, x[:, k])
    return out


def leibniz_residual(x: np.ndarray, rng: np.random.Generator) -> float:
    """Phi_L(X) against the Leibniz expansion on a random decomposable wedge."""
    w = rng.standard_normal((3, 6)) + 1j * rng.standard_normal((3, 6))
    lhs = derivation(x) @ wedge3(w[0], w[1], w[2])
    rhs = wedge3(x @ w[0], w[1], w[2]) + wedge3(w[0], x @ w[1], w[2]) + wedge3(w[0], w[1], x @ w[2])
    return float(np.linalg.norm(lhs - rhs))


def derivative_residual(x: np.ndarray, step: float = 1e-5) -> float:
    """Phi_L(X) against the central difference of exp(sX)^(3) at s = 0."""
    x = np.asarray(x, dtype=complex)
    quotient = (induced(expm(step * x)) - induced(expm(-step * x))) / (2.0 * step)
    return float(np.max(np.abs(quotient - derivation(x))))


# --- Lie algebras -----------------------------------------------------------


def _algebra_basis(extra: Sequence[Tuple[List[int], List[int]]]) -> List[np.ndarray]:
    """
    Real basis of {X in sp(W, tau) : X[rows, cols] = 0 for each extra block}.

    X = A + iB is parametrized by the 72 real entries of A and B.
    """
    t = tau_matrix()

    def constraints(p: np.ndarray) -> np.ndarray:
        x = (p[:36] + 1j * p[36:]).reshape(6, 6)
        parts = [x + x.conj().T, x @ t - t @ x.conj()]
        parts.extend(x[np.ix_(rows, cols)] for rows, cols in extra)
        flat = np.concatenate([part.ravel() for part in parts])
        return np.concatenate([flat.real, flat.imag])

    system = np.array([constraints(unit) for unit in np.eye(72)]).T
    kernel = null_space(system)
    return [(kernel[:36, k] + 1j * kernel[36:, k]).reshape(6, 6) for k in range(kernel.shape[1])]


def sp_basis() -> List[np.ndarray]:
    """Basis of sp(W, tau), dimension 21."""
    return _algebra_basis([])


def isotropy_algebra_basis() -> List[np.ndarray]:
    """Basis of sp(W, tau)_{2,1} = sp(W2) + sp(W1), dimension 13."""
    return _algebra_basis([(W2_INDEX, W1_INDEX), (W1_INDEX, W2_INDEX)])


def complement_basis() -> List[np.ndarray]:
    """Basis of m: the X in sp(W, tau) exchanging W2 and W1, dimension 8."""
    return _algebra_basis([(W2_INDEX, W2_INDEX), (W1_INDEX, W1_INDEX)])


def random_group_element(basis: Sequence[np.ndarray], rng: np.random.Generator) -> np.ndarray:
    coefficients = rng.standard_normal(len(basis))
    return expm(sum(c * x for c, x in zip(coefficients, basis)))


def extend_complex(y: np.ndarray) -> np.ndarray:
    """The tau-commuting extension diag(Y, conj(Y)) of a map of span{b1, b2, b3}."""
    y = np.asarray(y, dtype=complex)
    x = np.zeros((6, 6), dtype=complex)
    x[:3, :3] = y
    x[3:, 3:] = y.conj()
    return x


def _elementary(a: int, b: int) -> np.ndarray:
    e = np.zeros((3, 3), dtype=complex)
    e[a, b] = 1.0
    return e


def su3_complement_basis() -> List[np.ndarray]:
    """The part of su(3) exchanging span{b1, b2} and span{b3}, dimension 4."""
    out = []
    for a in (0, 1):
        out.append(extend_complex(_elementary(a, 2) - _elementary(2, a)))
        out.append(extend_complex(1j * (_elementary(a, 2) + _elementary(2, a))))
    return out


def so3_complement_basis() -> List[np.ndarray]:
    """The part of so(3) exchanging span{b1, b2} and span{b3}, dimension 2."""
    return [extend_complex(_elementary(a, 2) - _elementary(2, a)) for a in (0, 1)]


# --- the wedge space --------------------------------------------------------


@dataclass
class WedgeSpace:
    """
    Lambda^3 W with the data of the HP^2 construction.

    Matrices hold coordinate vectors over the 20 basis wedges as columns.
    """

    tau: np.ndarray
    tau3: np.ndarray
    omega: np.ndarray
    wedge_omega: np.ndarray
    v7: np.ndarray
    eta: np.ndarray
    u_basis: np.ndarray
    u_perp_basis: np.ndarray
    l_space: np.ndarray
    vc: np.ndarray
    vr: np.ndarray
    zeta: np.ndarray
    seed: int = 0
    checks: Dict[str, float] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(TRIPLES)

    @property
    def dim_v7(self) -> int:
        """Quaternionic dimension of V."""
        return self.v7.shape[1] // 2

    def tau3_of(self, x: np.ndarray) -> np.ndarray:
        return self.tau3 @ np.conj(x)

    def quaternion_coordinate(self, f: np.ndarray, y: np.ndarray) -> np.ndarray:
        """The q with y = f q + (rest orthogonal to f H), for an H-unit f."""
        z1 = np.vdot(f, y)
        z2 = np.conj(np.vdot(self.tau3_of(f), y))
        return np.array([z1.real, z1.imag, z2.real, z2.imag])

    def h_span(self, vectors: np.ndarray) -> np.ndarray:
        """Complex basis columns of the H-span of the given columns."""
        return np.concatenate([vectors, self.tau3 @ np.conj(vectors)], axis=1)

    def to_dict(self) -> Dict[str, object]:
        return {
            "dim_wedge": self.dim,
            "dim_V7": self.dim_v7,
            "dim_VC": self.vc.shape[1],
            "dim_VR": self.vr.shape[1],
            "seed": self.seed,
            "checks": dict(self.checks),
        }


def _u_vectors(eta: np.ndarray) -> np.ndarray:
    return np.stack([wedge_vector_form(basis_vector(k), eta) / SQRT2 for k in (0, 1)], axis=1)


def _u_perp_vectors() -> np.ndarray:
    e = [basis_vector(k) for k in range(6)]
    f1 = (wedge3(e[2], e[0], e[3]) - wedge3(e[2], e[1], e[4])) / SQRT2
    return np.stack(
        [f1, wedge3(e[0], e[1], e[2]), wedge3(e[3], e[1], e[2]), wedge3(e[0], e[4], e[2]), wedge3(e[0], e[1], e[5])],
        axis=1,
    )


def _l_vectors() -> np.ndarray:
    e = [basis_vector(k) for k in range(6)]
    columns = []
    for nu in range(3):
        tb = e[3 + nu]
        columns.extend([wedge3(tb, e[1], e[2]), wedge3(e[0], tb, e[2]), wedge3(e[0], e[1], tb)])
    return np.stack(columns, axis=1)


def _outside(space: np.ndarray, vectors: np.ndarray) -> float:
    """Largest norm of the part of the columns of ``vectors`` orthogonal to ``space``."""
    q = orth(space)
    rest = vectors - q @ (q.conj().T @ vectors)
    return float(np.max(np.linalg.norm(rest, axis=0), initial=0.0))


def _intersect(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the intersection of two column spans."""
    complement = null_space(orth(first).conj().T)
    coefficients = null_space(complement.conj().T @ second)
    if coefficients.shape[1] == 0:
        return np.zeros((first.shape[0], 0), dtype=complex)
    return orth(second @ coefficients)


def _real_part_space(space: np.ndarray, extra_normals: np.ndarray) -> np.ndarray:
    """Real vectors of a complex column span, orthogonal to real normals."""
    q = orth(space)
    rest = np.eye(q.shape[0]) - q @ q.conj().T
    blocks = [rest.real, rest.imag]
    if extra_normals.size:
        blocks.append(np.atleast_2d(extra_normals))
    return null_space(np.vstack(blocks))


def _check(checks: Dict[str, float], name: str, value: float, limit: float = WEDGE_TOL) -> None:
    checks[name] = value
    if value > limit:
        raise ConstructionError(f"Wedge construction check {name!r} failed", value)


def _check_dim(name: str, actual: int, expected: int) -> None:
    if actual != expected:
        raise ConstructionError(f"{name} has dimension {actual}, expected {expected}")


def build_wedge(seed: int = 0, trials: int = 3) -> WedgeSpace:
    """
    Build Lambda^3 W, V = (W ^ omega)^perp, U = W2 ^ eta and the restrictions.

    Args:
        seed: Seed of the random group elements used in the invariance checks
        trials: Number of random elements per check

    Returns:
        WedgeSpace with every residual recorded in ``checks``

    Raises:
        ConstructionError: if a dimension or an invariance check fails
    """
    rng = np.random.default_rng(seed)
    t = tau_matrix()
    e = [basis_vector(k) for k in range(6)]
    checks: Dict[str, float] = {}

    tau3 = induced(t).real
    omega = sum(wedge2(e[k], t @ e[k]) for k in range(3))
    wedge_omega = np.stack([wedge_vector_form(e[a], omega) for a in range(6)], axis=1)
    _check_dim("W ^ omega", np.linalg.matrix_rank(wedge_omega), 6)
    v7 = null_space(wedge_omega.conj().T)
    _check_dim("V", v7.shape[1], 14)
    _check(checks, "v7_tau_invariant", _outside(v7, tau3 @ np.conj(v7)))

    sp = sp_basis()
    _check_dim("sp(W, tau)", len(sp), 21)
    omega_moved = 0.0
    for _ in range(trials):
        b = random_group_element(sp, rng)
        moved = sum(wedge2(b @ e[k], t @ np.conj(b @ e[k])) for k in range(3))
        omega_moved = max(omega_moved, float(np.linalg.norm(moved - omega)))
    _check(checks, "omega_basis_independence", omega_moved)

    signs = (1.0, 1.0, -1.0)
    eta = sum(s * wedge2(e[k], t @ e[k]) for s, k in zip(signs, range(3)))
    k_basis = isotropy_algebra_basis()
    _check_dim("sp(W2) + sp(W1)", len(k_basis), 13)
    eta_moved = 0.0
    for _ in range(trials):
        b = random_group_element(k_basis, rng)
        moved = sum(s * wedge2(b @ e[k], t @ np.conj(b @ e[k])) for s, k in zip(signs, range(3)))
        eta_moved = max(eta_moved, float(np.linalg.norm(moved - eta)))
    _check(checks, "eta_basis_independence", eta_moved)

    u_basis = _u_vectors(eta)
    u_perp = _u_perp_vectors()
    frame = np.concatenate([u_basis, u_perp], axis=1)
    h_frame = np.concatenate([frame, tau3 @ np.conj(frame)], axis=1)
    _check(checks, "frame_orthonormal", float(np.max(np.abs(h_frame.conj().T @ h_frame - np.eye(14)))))
    _check(checks, "frame_in_v7", _outside(v7, h_frame))

    l_space = _l_vectors()
    vc = _intersect(v7, l_space)
    _check_dim("V^C", vc.shape[1], 6)
    complex_frame = np.concatenate([u_basis, u_perp[:, [0, 2, 3, 4]]], axis=1)
    _check(checks, "complex_frame_in_vc", _outside(vc, complex_frame))

    zeta = u_perp[:, 2] + u_perp[:, 3] + u_perp[:, 4]
    real_vc = _real_part_space(vc, np.zeros((0, len(TRIPLES))))
    _check_dim("V^C real part", real_vc.shape[1], 6)
    vr = _real_part_space(vc, zeta.real[None, :])
    _check_dim("V^R", vr.shape[1], 5)
    zeta_moved = 0.0
    for trial in range(trials):
        rotation = special_ortho_group.rvs(3, random_state=seed + trial)
        b = extend_complex(rotation)
        zeta_moved = max(zeta_moved, float(np.linalg.norm(induced(b) @ zeta - zeta)))
    _check(checks, "zeta_rotation_invariance", zeta_moved)

    leibniz = max(leibniz_residual(x, rng) for x in sp[:trials])
    _check(checks, "leibniz", leibniz, 1e-10)

    ws = WedgeSpace(t, tau3, omega, wedge_omega, v7, eta, u_basis, u_perp, l_space, vc, vr, zeta, seed, checks)
    logger.info(f"Built wedge space: dim {ws.dim}, V of H-dim {ws.dim_v7}, V^C dim {vc.shape[1]}, V^R dim {vr.shape[1]}")
    logger.debug(f"Wedge checks: {checks}")
    return ws


# --- orbit tangents ---------------------------------------------------------


def _orbit_tangent(
    ws: WedgeSpace, generators: Sequence[np.ndarray], columns: np.ndarray, rows: np.ndarray
) -> Tuple[RealSubspace, float]:
    """
    Tangent vectors T[r, c] = q(f_r, Phi(X) u_c) for the generators X.

    Returns:
        ``(tangent, leak)`` with ``leak`` the largest part of Phi(X) u_c
        outside the H-span of the rows
    """
    n = rows.shape[1]
    h_rows = ws.h_span(rows)
    vectors, leak = [], 0.0
    for x in generators:
        phi = derivation(x)
        matrix = np.zeros((n, 2, 4))
        for c in range(columns.shape[1]):
            image = phi @ columns[:, c]
            for r in range(n):
                matrix[r, c] = ws.quaternion_coordinate(rows[:, r], image)
            rest = image - h_rows @ (h_rows.conj().T @ image)
            leak = max(leak, float(np.linalg.norm(rest)))
        vectors.append(TangentVector(matrix))
    return RealSubspace.from_vectors(vectors, n), leak


def _return_residual(ws: WedgeSpace, generators: Sequence[np.ndarray], rows: np.ndarray, columns: np.ndarray) -> float:
    """Largest part of Phi(X) f_r outside the H-span of U."""
    h_u = ws.h_span(columns)
    worst = 0.0
    for x in generators:
        images = derivation(x) @ rows
        rest = images - h_u @ (h_u.conj().T @ images)
        worst = max(worst, float(np.max(np.linalg.norm(rest, axis=0))))
    return worst


def _report(
    ws: WedgeSpace,
    target: LtsDescriptor,
    generators: Sequence[np.ndarray],
    rows: np.ndarray,
    expected_dim: int,
) -> EmbeddingReport:
    tangent, leak = _orbit_tangent(ws, generators, ws.u_basis, rows)
    back = _return_residual(ws, generators, rows, ws.u_basis)
    if max(leak, back) > WEDGE_TOL:
        raise ConstructionError(f"Phi_L(m) does not exchange U and its complement for {target}", max(leak, back))
    if tangent.dim != expected_dim:
        raise ConstructionError(f"Orbit tangent for {target} has dimension {tangent.dim}, expected {expected_dim}")
    return make_report(target, tangent, {"leak_into_u": leak, "leak_out_of_u": back})


def sp3_orbit_tangent(ws: WedgeSpace) -> EmbeddingReport:
    """
    Tangent space at U of the Sp(W, tau)-orbit in G2(V), with n = 5.

    Raises:
        ConstructionError: if Phi_L(m) does not map U into its complement in V
            and back
    """
    generators = complement_basis()
    if len(generators) != 8:
        raise ConstructionError(f"m has dimension {len(generators)}, expected 8")
    target = LtsDescriptor.with_tau("P12", HPType("H", 2))
    return _report(ws, target, generators, ws.u_perp_basis, 8)


def complex_restriction(ws: WedgeSpace) -> EmbeddingReport:
    """Tangent space at U^C of the SU(3)-orbit in G2(V^C), with n = 4."""
    rows = ws.u_perp_basis[:, [0, 2, 3, 4]]
    target = LtsDescriptor.with_tau("P12", HPType("C", 2))
    return _report(ws, target, su3_complement_basis(), rows, 4)


def real_restriction(ws: WedgeSpace) -> EmbeddingReport:
    """Tangent space at U^R of the SO(3)-orbit in G2(V^R), with n = 3."""
    f = ws.u_perp_basis
    rows = np.stack([f[:, 0], (f[:, 2] - f[:, 3]) / SQRT2, (f[:, 2] + f[:, 3] - 2.0 * f[:, 4]) / np.sqrt(6.0)], axis=1)
    residual = _outside(ws.vr, np.concatenate([ws.u_basis, rows], axis=1))
    if residual > WEDGE_TOL:
        raise ConstructionError("The real frame does not lie in V^R", residual)
    target = LtsDescriptor.with_tau("P12", HPType("R", 2))
    return _report(ws, target, so3_complement_basis(), rows, 2)
