"""
Tests for the complex Grassmannian inside the quaternionic one
"""

import numpy as np
import pytest

from src.complex_grassmannian.construct import (
    check_row,
    claC_construct,
    claC_list,
    exclusion_reason,
    expected_positions,
    is_maximal_in_m1,
)
from src.complex_grassmannian.structures import (
    COMPLEX,
    NEITHER,
    TOTALLY_REAL,
    StructureSpan,
    conjugated_structure_residual,
    j_position,
    position_report,
)
from src.complex_grassmannian.tangent import CTangentVector, c_curvature, ensure_in_m1, m1_subspace
from src.constructors.build import construct
from src.constructors.classifier import classify
from src.constructors.descriptor import LtsDescriptor, parse_descriptor
from src.lts.verify import is_lts
from src.model.curvature import curvature
from src.model.tangent import TangentVector
from src.utils.errors import DescriptorError, DomainError, ShapeError


def random_c(n, rng):
    return CTangentVector(rng.standard_normal((n, 2)) + 1j * rng.standard_normal((n, 2)))


class TestCTangentVector:
    """n x 2 complex matrices"""

    def test_shape(self):
        """Two columns and n >= 2"""
        with pytest.raises(ShapeError):
            CTangentVector(np.zeros((3, 3)))
        with pytest.raises(ShapeError):
            CTangentVector(np.zeros((1, 2)))

    def test_round_trip(self):
        """A complex matrix survives the trip through m"""
        z = random_c(3, np.random.default_rng(0))
        again = CTangentVector.from_tangent(z.to_tangent())
        assert np.allclose(again.matrix, z.matrix)

    def test_rejects_j_components(self):
        """Vectors with j or k entries are not in m1"""
        v = TangentVector.from_entries(2, {(0, 0): (0.0, 0.0, 1.0, 0.0)})
        with pytest.raises(DomainError):
            CTangentVector.from_tangent(v)

    def test_curvature_agrees_with_m(self):
        """The curvature of m1 is the restriction of the curvature of m"""
        rng = np.random.default_rng(1)
        u, v, w = (random_c(3, rng) for _ in range(3))
        expected = curvature(u.to_tangent(), v.to_tangent(), w.to_tangent())
        assert c_curvature(u, v, w).to_tangent().allclose(expected, 1e-10)


class TestM1:
    """m1 = G2((C, n))"""

    @pytest.mark.parametrize("n", [2, 3])
    def test_dimension_and_type(self, n):
        """m1 has dimension 4n and is the G2((C, n)) system"""
        m1 = m1_subspace(n)
        assert m1.dim == 4 * n
        assert is_lts(m1)[0]
        assert m1.equal(construct(f"G2:C{n}", n))

    def test_classified(self):
        """m1 at n = 2 classifies as G2((C, 2))"""
        assert classify(m1_subspace(2)) == parse_descriptor("G2:C2")

    def test_ensure_in_m1(self):
        """Quaternionic lines leave m1"""
        ensure_in_m1(construct("P0:C1", 2))
        with pytest.raises(DomainError):
            ensure_in_m1(construct("P0:H1", 2))


class TestStructures:
    """J and the quaternionic structure on m1"""

    def test_relations(self):
        """X_a^2 = -1 and X_1 X_2 = X_3"""
        assert StructureSpan().relation_residual() == pytest.approx(0.0)

    def test_bad_structure(self):
        """Three 2x2 matrices are needed"""
        with pytest.raises(ShapeError):
            StructureSpan(x=(np.eye(2), np.eye(2)))

    def test_j_positions(self):
        """CP^1 is complex, RP^2 totally real"""
        assert j_position(construct("P0:C1", 2))[0] == COMPLEX
        assert j_position(construct("P0:R2", 2))[0] == TOTALLY_REAL

    def test_outside_m1(self):
        """Positions are only defined inside m1"""
        with pytest.raises(DomainError):
            j_position(construct("P0:H1", 2))

    def test_position_report(self):
        """Both positions of the S13 sphere are neither"""
        report = position_report(claC_construct("S13:2", 2))
        assert report["J"] == NEITHER
        assert report["QK"] == NEITHER

    def test_conjugated_structure(self):
        """Unitary B1 preserves the span of the X_a, other matrices do not"""
        c, s = np.cos(0.7), np.sin(0.7)
        unitary = np.array([[c, -s * 1j], [-s * 1j, c]])
        assert conjugated_structure_residual(unitary) < 1e-12
        assert conjugated_structure_residual(np.diag([1.0, 2.0])) > 1e-3
        with pytest.raises(ShapeError):
            conjugated_structure_residual(np.eye(3))


class TestClassificationInM1:
    """Types realized in m1 with their positions"""

    def test_exclusions(self):
        """S5, Sp2, higher S13 and quaternionic types do not occur"""
        assert exclusion_reason(LtsDescriptor.plain("S5")) is not None
        assert exclusion_reason(LtsDescriptor.plain("Sp2")) is not None
        assert exclusion_reason(parse_descriptor("S13:3")) is not None
        assert exclusion_reason(parse_descriptor("P0:H1")) is not None
        assert exclusion_reason(parse_descriptor("S1xS5:4")) is not None
        assert exclusion_reason(parse_descriptor("P44:H1")) is None
        assert exclusion_reason(parse_descriptor("PxP:C1,R1")) is None

    def test_expected_positions(self):
        """The real projective plane of P12 is the listed exception"""
        assert expected_positions(parse_descriptor("P12:R2")) == (TOTALLY_REAL, NEITHER)
        assert expected_positions(parse_descriptor("P12:R1")) == (TOTALLY_REAL, TOTALLY_REAL)
        with pytest.raises(DescriptorError):
            expected_positions(LtsDescriptor.plain("Sp2"))

    def test_construct_refuses_excluded(self):
        """Excluded types have no representative"""
        with pytest.raises(DescriptorError):
            claC_construct("Sp2", 2)

    def test_maximal(self):
        """Maximal types of m1"""
        assert is_maximal_in_m1(LtsDescriptor.plain("Q3"), 2)
        assert is_maximal_in_m1(parse_descriptor("P0:C2"), 2)
        assert is_maximal_in_m1(parse_descriptor("G2:R2"), 2)
        assert not is_maximal_in_m1(parse_descriptor("P0:C1"), 2)

    def test_list(self):
        """Listed rows exist in m1 and carry their dimension"""
        rows = claC_list(2)
        names = {str(row.descriptor) for row in rows}
        assert {"Q3", "P0:C2", "G2:R2", "S13:2"} <= names
        assert "Sp2" not in names
        assert all(row.dim == row.descriptor.dimension() for row in rows)
        assert rows[0].to_dict()["type"] == str(rows[0].descriptor)

    @pytest.mark.parametrize("n", [2, 3])
    def test_positions_agree(self, n):
        """Computed positions match the tabulated ones"""
        for row in claC_list(n):
            result = check_row(row)
            assert result["passed"], result

    @pytest.mark.slow
    def test_positions_agree_n4(self):
        """Computed positions match the tabulated ones at n = 4"""
        for row in claC_list(4):
            assert check_row(row)["passed"], str(row.descriptor)

    @pytest.mark.parametrize("n", [2, 3])
    def test_representatives_are_lts(self, n):
        """Every representative is a Lie triple system inside m1"""
        for row in claC_list(n):
            subspace = claC_construct(row.descriptor, n)
            ensure_in_m1(subspace)
            assert subspace.dim == row.dim
            assert is_lts(subspace)[0]
