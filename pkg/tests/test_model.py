"""
Tests for the tangent model: vectors, isotropy, curvature and geodesics
"""

import numpy as np
import pytest

from src.cartan.frame import standard_frame
from src.model.blocks import curvature_blocks
from src.model.curvature import (
    bracket_km,
    bracket_mm,
    curvature,
    isotropy_act,
    metric,
    sectional_curvature,
)
from src.model.geodesic import (
    ambient_exp,
    ambient_generator,
    geodesic_at,
    geodesic_closed_form_pi4,
    graph_chart,
    plane_intersection_dim,
)
from src.model.tangent import IsotropyElement, Plane, TangentVector
from src.qlinalg.matrix import qadjoint, qeye, qmatmul
from src.qlinalg.quaternion import UNIT_I
from src.utils.errors import DomainError, ShapeError, ValidationError


def entry(n, row, col, q=(1.0, 0.0, 0.0, 0.0)):
    return TangentVector.from_entries(n, {(row, col): q})


def random_vector(n, rng):
    return TangentVector(rng.standard_normal((n, 2, 4)))


class TestTangentVector:
    """Tangent vectors as n x 2 quaternion matrices"""

    def test_needs_n_at_least_two(self):
        """n = 1 is rejected"""
        with pytest.raises(ShapeError):
            TangentVector(np.zeros((1, 2, 4)))

    def test_wrong_shape(self):
        """Three columns are rejected"""
        with pytest.raises(ShapeError):
            TangentVector(np.zeros((3, 3, 4)))

    def test_immutable(self):
        """The matrix is read-only"""
        v = TangentVector.zeros(2)
        with pytest.raises(ValueError):
            v.matrix[0, 0, 0] = 1.0

    def test_mismatched_n(self):
        """Adding vectors over different n raises ShapeError"""
        with pytest.raises(ShapeError):
            TangentVector.zeros(2) + TangentVector.zeros(3)

    def test_dict_round_trip(self):
        """to_dict and from_dict are inverse"""
        v = random_vector(3, np.random.default_rng(0))
        assert TangentVector.from_dict(v.to_dict()).allclose(v, 0.0)

    def test_dict_declared_n_checked(self):
        """A wrong declared n is rejected"""
        data = TangentVector.zeros(3).to_dict()
        data["n"] = 4
        with pytest.raises(ShapeError):
            TangentVector.from_dict(data)

    def test_right_multiplication(self):
        """v * i multiplies every entry from the right"""
        v = entry(2, 0, 0).right(UNIT_I)
        assert np.allclose(v.matrix[0, 0], [0.0, 1.0, 0.0, 0.0])


class TestIsotropy:
    """Sp(2) x Sp(n) acting on m"""

    def test_rejects_non_symplectic(self):
        """2 * id is not symplectic"""
        with pytest.raises(ValidationError):
            IsotropyElement(2.0 * qeye(2), qeye(3))

    def test_random_is_symplectic(self):
        """Random elements satisfy B* B = id"""
        g = IsotropyElement.random(3, np.random.default_rng(1))
        assert np.allclose(qmatmul(qadjoint(g.b2), g.b2), qeye(3), atol=1e-10)

    def test_action_is_isometric(self):
        """The isotropy action preserves the metric"""
        rng = np.random.default_rng(2)
        g = IsotropyElement.random(3, rng)
        u, v = random_vector(3, rng), random_vector(3, rng)
        assert metric(isotropy_act(g, u), isotropy_act(g, v)) == pytest.approx(metric(u, v))

    def test_inverse(self):
        """g^-1 undoes g"""
        rng = np.random.default_rng(3)
        g = IsotropyElement.random(2, rng)
        v = random_vector(2, rng)
        assert isotropy_act(g.inverse(), isotropy_act(g, v)).allclose(v, 1e-10)

    def test_n_mismatch(self):
        """Acting over the wrong n raises ShapeError"""
        with pytest.raises(ShapeError):
            isotropy_act(IsotropyElement.identity(3), TangentVector.zeros(2))


class TestCurvature:
    """Curvature tensor R(u,v)w = -[[u,v],w]"""

    def test_equals_double_bracket(self):
        """R(u,v)w = -[[u,v],w]"""
        rng = np.random.default_rng(4)
        u, v, w = (random_vector(3, rng) for _ in range(3))
        assert curvature(u, v, w).allclose(-bracket_km(bracket_mm(u, v), w), 1e-9)

    def test_bracket_is_skew(self):
        """[u, v] lies in sp(2) + sp(n)"""
        rng = np.random.default_rng(5)
        assert bracket_mm(random_vector(3, rng), random_vector(3, rng)).is_skew(1e-10)

    def test_antisymmetric(self):
        """R(u,v) = -R(v,u)"""
        rng = np.random.default_rng(6)
        u, v, w = (random_vector(2, rng) for _ in range(3))
        assert curvature(u, v, w).allclose(-curvature(v, u, w), 1e-9)

    def test_first_bianchi(self):
        """R(u,v)w + R(v,w)u + R(w,u)v = 0"""
        rng = np.random.default_rng(7)
        u, v, w = (random_vector(3, rng) for _ in range(3))
        total = curvature(u, v, w) + curvature(v, w, u) + curvature(w, u, v)
        assert total.norm() < 1e-9

    def test_pair_symmetry(self):
        """<R(u,v)w, z> = <R(w,z)u, v>"""
        rng = np.random.default_rng(8)
        u, v, w, z = (random_vector(3, rng) for _ in range(4))
        assert metric(curvature(u, v, w), z) == pytest.approx(metric(curvature(w, z, u), v))

    def test_isotropy_equivariance(self):
        """g R(u,v)w = R(gu, gv) gw"""
        rng = np.random.default_rng(9)
        g = IsotropyElement.random(3, rng)
        u, v, w = (random_vector(3, rng) for _ in range(3))
        left = isotropy_act(g, curvature(u, v, w))
        right = curvature(isotropy_act(g, u), isotropy_act(g, v), isotropy_act(g, w))
        assert left.allclose(right, 1e-9)

    def test_sectional_values(self):
        """Flat torus, real projective and complex line directions"""
        base = entry(3, 0, 0)
        assert sectional_curvature(base, entry(3, 1, 1)) == pytest.approx(0.0)
        assert sectional_curvature(base, entry(3, 1, 0)) == pytest.approx(1.0)
        assert sectional_curvature(base, base.right(UNIT_I)) == pytest.approx(4.0)

    def test_sectional_needs_orthonormal(self):
        """Non-orthonormal pairs are rejected"""
        with pytest.raises(ValidationError):
            sectional_curvature(entry(2, 0, 0) * 2.0, entry(2, 1, 1))

    def test_metric_n_mismatch(self):
        """The metric needs equal n"""
        with pytest.raises(ShapeError):
            metric(TangentVector.zeros(2), TangentVector.zeros(3))


class TestCurvatureBlocks:
    """Block form of R relative to the standard conjugation"""

    @pytest.fixture
    def frame(self):
        return standard_frame(3)

    @pytest.mark.parametrize("sides", [(1, 1), (-1, -1), (1, -1), (-1, 1)])
    def test_matches_curvature(self, frame, sides):
        """Blocks agree with R(u,v)w = -[[u,v],w]"""
        rng = np.random.default_rng(5)
        zero = np.zeros((3, 4))

        def block(side):
            x = rng.standard_normal((3, 4))
            return frame.assemble(x, zero) if side == 1 else frame.assemble(zero, x)

        u, v = block(sides[0]), block(sides[1])
        w = random_vector(3, rng)
        assert curvature_blocks(u, v, w, frame).allclose(curvature(u, v, w), 1e-10)

    def test_zero_vector(self, frame):
        """The zero vector lies in both blocks"""
        w = random_vector(3, np.random.default_rng(6))
        assert curvature_blocks(TangentVector.zeros(3), entry(3, 0, 0), w, frame).norm() == 0.0

    def test_outside_blocks(self, frame):
        """A vector with both columns nonzero is refused"""
        mixed = entry(3, 0, 0) + entry(3, 1, 1)
        with pytest.raises(DomainError):
            curvature_blocks(mixed, entry(3, 0, 0), entry(3, 2, 1), frame)

    def test_n_mismatch(self, frame):
        """Vectors and frame need the same n"""
        with pytest.raises(ShapeError):
            curvature_blocks(entry(2, 0, 0), entry(2, 0, 0), entry(2, 0, 0), frame)


class TestPlane:
    """Points of the Grassmannian"""

    def test_origin(self):
        """The base point meets itself in dimension 2"""
        origin = Plane.origin(3)
        assert origin.n == 3
        assert plane_intersection_dim(origin, origin) == 2

    def test_non_orthonormal(self):
        """Non-orthonormal columns raise ValidationError"""
        basis = np.zeros((4, 2, 4))
        basis[0, 0, 0] = basis[0, 1, 0] = 1.0
        with pytest.raises(ValidationError):
            Plane(basis)

    def test_dict_round_trip(self):
        """to_dict and from_dict are inverse"""
        plane = geodesic_at(entry(2, 0, 0) + entry(2, 1, 1, UNIT_I.as_array()), 0.7)
        again = Plane.from_dict(plane.to_dict())
        assert np.allclose(again.basis, plane.basis)


class TestGeodesics:
    """exp(tX) V'"""

    def test_time_zero(self):
        """gamma(0) = V'"""
        plane = geodesic_at(entry(2, 0, 0), 0.0)
        assert plane_intersection_dim(plane, Plane.origin(2)) == 2

    def test_generator_exponential_is_symplectic(self):
        """exp(X) is unitary in its complex form"""
        x = ambient_generator(random_vector(2, np.random.default_rng(10)))
        g = ambient_exp(x)
        assert np.allclose(qmatmul(qadjoint(g), g), qeye(4), atol=1e-10)

    def test_quarter_turn_of_a_root_vector(self):
        """Along E(0,0) the plane at pi/2 is span{f1, e2}"""
        plane = geodesic_at(entry(2, 0, 0), np.pi / 2)
        assert plane_intersection_dim(plane, Plane.origin(2)) == 1
        with pytest.raises(DomainError):
            graph_chart(plane)

    def test_closed_form_for_pi4(self):
        """The pi/4 closed form agrees with the matrix exponential"""
        v = entry(3, 0, 0) + entry(3, 1, 1)
        for t in (0.3, 1.1, 2.5):
            closed = geodesic_closed_form_pi4(v, t)
            assert plane_intersection_dim(closed, geodesic_at(v, t)) == 2

    def test_closed_form_rejects_other_angles(self):
        """A root vector of angle 0 is rejected"""
        with pytest.raises(DomainError):
            geodesic_closed_form_pi4(entry(2, 0, 0), 1.0)

    def test_zero_velocity(self):
        """The zero vector has no geodesic"""
        with pytest.raises(DomainError):
            geodesic_at(TangentVector.zeros(2), 1.0)

    def test_graph_chart_of_origin(self):
        """V' is the graph of zero"""
        assert graph_chart(Plane.origin(2)).norm() == pytest.approx(0.0)

    def test_graph_chart_recovers_small_step(self):
        """graph(T) for T = tan(t) E(0,0) at the point gamma(t)"""
        t = 0.4
        chart = graph_chart(geodesic_at(entry(2, 0, 0), t))
        assert chart.allclose(entry(2, 0, 0) * np.tan(t), 1e-9)

    def test_intersection_n_mismatch(self):
        """Planes over different n cannot be intersected"""
        with pytest.raises(ShapeError):
            plane_intersection_dim(Plane.origin(2), Plane.origin(3))
