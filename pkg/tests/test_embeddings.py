"""
Tests for closed geodesics, product embeddings, the exterior-algebra HP^2 and the centrosome
"""

import numpy as np
import pytest

from src.constructors.build import construct
from src.constructors.descriptor import PHI_PI4, PHI_S13
from src.embeddings.centrosome import centrosome_check, isotropy_algebra, sp2_basis
from src.embeddings.periods import (
    INFINITE,
    diameter_excess,
    geodesic_period,
    maximal_torus_tangent,
    period_check,
    rational_slope,
    torus_diameter,
    torus_distance,
)
from src.embeddings.products import (
    ProductSplitting,
    diagonal_tangent,
    product_embedding,
    product_tangent,
    torus_factor_tangent,
)
from src.embeddings.wedge import (
    build_wedge,
    complement_basis,
    complex_restriction,
    derivative_residual,
    induced,
    isotropy_algebra_basis,
    real_restriction,
    sp3_orbit_tangent,
    sp_basis,
    tau_matrix,
    wedge3,
)
from src.lts.verify import is_lts
from src.qlinalg.hptype import HPType
from src.utils.errors import DescriptorError, DomainError, ShapeError, ValidationError


class TestPeriods:
    """Closed geodesics in the maximal torus"""

    @pytest.mark.parametrize("t, slope", [(0.0, (0, 1)), (PHI_S13, (1, 3)), (np.arctan(0.5), (1, 2)), (PHI_PI4, (1, 1))])
    def test_rational_slope(self, t, slope):
        """tan(t) in lowest terms"""
        assert rational_slope(t) == slope

    def test_irrational_slope(self):
        """tan(0.3) is not a small fraction"""
        assert rational_slope(0.3) is None
        assert geodesic_period(0.3) == INFINITE

    def test_out_of_range(self):
        """t must lie in [0, pi/4]"""
        with pytest.raises(DomainError):
            rational_slope(1.0)

    @pytest.mark.parametrize(
        "t, period", [(0.0, np.pi), (PHI_PI4, np.pi * np.sqrt(2.0)), (PHI_S13, np.pi * np.sqrt(10.0))]
    )
    def test_period(self, t, period):
        """pi sqrt(p^2 + q^2)"""
        assert geodesic_period(t) == pytest.approx(period)

    def test_period_against_geodesic(self):
        """The geodesic at arctan(1/3) returns at its period and not before"""
        closes, early = period_check(PHI_S13, samples=20)
        assert closes
        assert early == 0

    def test_period_check_needs_closed(self):
        """Open geodesics have nothing to check"""
        with pytest.raises(DomainError):
            period_check(0.3)

    def test_torus_diameter(self):
        """R^2 / (pi Z)^2 has diameter pi / sqrt2"""
        assert torus_diameter() == pytest.approx(np.pi / np.sqrt(2.0))
        assert torus_distance(np.zeros(2), np.array([np.pi, 0.0])) == pytest.approx(0.0)
        with pytest.raises(DomainError):
            torus_diameter(grid=5)

    def test_diameter_excess(self):
        """The diagonal geodesic attains the diameter, arctan(1/3) exceeds it"""
        assert diameter_excess(PHI_PI4) == pytest.approx(0.0, abs=1e-9)
        assert diameter_excess(PHI_S13) > 0.0

    def test_torus_tangent(self):
        """The Cartan plane is a flat Lie triple system"""
        tangent = maximal_torus_tangent(n=3)
        assert tangent.dim == 2
        assert tangent.equal(construct("PxP:R1,R1", 3))


class TestProducts:
    """HP(V1) x HP(V2) and diagonals"""

    def test_splitting_bounds(self):
        """The factors must fit in H^{n+2}"""
        with pytest.raises(DescriptorError):
            ProductSplitting(0, 1, 2)
        with pytest.raises(DescriptorError):
            ProductSplitting(2, 1, 2)

    def test_coordinates(self):
        """V1 and V2 use disjoint coordinates"""
        splitting = ProductSplitting(2, 1, 3)
        assert not set(splitting.coords1) & set(splitting.coords2)

    def test_embedding_rejects_foreign_vectors(self):
        """Representatives must lie in their factor"""
        splitting = ProductSplitting(1, 1, 2)
        e1, e2 = np.zeros((4, 4)), np.zeros((4, 4))
        e1[0, 0] = e2[1, 0] = 1.0
        assert product_embedding(e1, e2, splitting).n == 2
        with pytest.raises(ValidationError):
            product_embedding(e2, e2, splitting)
        with pytest.raises(ShapeError):
            product_embedding(e1[:3], e2, splitting)

    def test_product_tangent(self):
        """The differential at (e1, e2) is the PxP system"""
        tangent = product_tangent(ProductSplitting(1, 1, 2))
        assert tangent.dim == 8
        assert tangent.equal(construct("PxP:H1,H1", 2))

    def test_single_factor(self):
        """With V2 a line the image is a P0 system"""
        tangent = product_tangent(ProductSplitting(2, 0, 2))
        assert tangent.equal(construct("P0:H2", 2))

    def test_torus_factor(self):
        """RP^1 x RP^1 is the maximal torus"""
        assert torus_factor_tangent(2).equal(maximal_torus_tangent(n=2))

    def test_diagonal(self):
        """The diagonal of HP^1 x HP^1 is a P44 system"""
        tangent = diagonal_tangent(HPType("H", 1), 2)
        assert tangent.equal(construct("P44:H1", 2))
        assert is_lts(tangent)[0]

    def test_diagonal_bound(self):
        """The diagonal needs 2 dim(tau) <= n"""
        with pytest.raises(DescriptorError):
            diagonal_tangent(HPType("H", 2), 3)


class TestExteriorAlgebra:
    """Linear algebra on the third exterior power of C^6"""

    def test_tau_squares_to_minus_one(self):
        """tau^2 = -id on W and on Lambda^3 W"""
        t = tau_matrix()
        assert np.allclose(t @ t, -np.eye(6))
        tau3 = induced(t)
        assert np.allclose(tau3 @ tau3, -np.eye(20))

    def test_wedge_is_alternating(self):
        """Swapping two factors flips the sign"""
        rng = np.random.default_rng(0)
        a, b, c = rng.standard_normal((3, 6))
        assert np.allclose(wedge3(a, b, c), -wedge3(b, a, c))
        assert np.allclose(wedge3(a, a, c), 0.0)

    def test_algebra_dimensions(self):
        """sp(3) = 21, its isotropy part 13 and the complement 8"""
        assert len(sp_basis()) == 21
        assert len(isotropy_algebra_basis()) == 13
        assert len(complement_basis()) == 8

    def test_derivation(self):
        """The induced derivation is the derivative of the induced group action"""
        assert derivative_residual(sp_basis()[0]) < 1e-6


@pytest.mark.slow
class TestWedgeHP2:
    """The Sp(3)-orbit of W2 ^ eta and its restrictions"""

    @pytest.fixture(scope="class")
    def wedge(self):
        return build_wedge(seed=0)

    def test_dimensions(self, wedge):
        """V is a quaternionic 7-space, V^C has dimension 6 and V^R dimension 5"""
        summary = wedge.to_dict()
        assert summary["dim_wedge"] == 20
        assert summary["dim_V7"] == 7
        assert summary["dim_VC"] == 6
        assert summary["dim_VR"] == 5
        assert max(summary["checks"].values()) < 1e-9

    def test_quaternionic_orbit(self, wedge):
        """The Sp(3)-orbit is of type P12((H, 2))"""
        report = sp3_orbit_tangent(wedge)
        assert report.tangent.dim == 8
        assert report.matches

    def test_complex_orbit(self, wedge):
        """The SU(3)-orbit is of type P12((C, 2))"""
        report = complex_restriction(wedge)
        assert report.tangent.dim == 4
        assert report.matches

    def test_real_orbit(self, wedge):
        """The SO(3)-orbit is of type P12((R, 2))"""
        report = real_restriction(wedge)
        assert report.tangent.dim == 2
        assert report.matches


class TestCentrosome:
    """The Sp2 component of the centrosome"""

    def test_sp2_basis(self):
        """sp(2) has dimension 10"""
        assert len(sp2_basis()) == 10

    def test_only_for_n_two(self):
        """The construction lives in G2(H^4)"""
        with pytest.raises(DomainError):
            isotropy_algebra(3)

    def test_orbit_is_sp2(self):
        """The orbit tangent through the midpoint is of type Sp2"""
        report = centrosome_check()
        assert report.tangent.dim == 10
        assert report.is_lts
        assert report.matches
        assert report.to_dict()["target"] == "Sp2"
