"""
Tests for the explicit constructors and the tables of types and inclusions
"""

import numpy as np
import pytest

from src.cartan.angles import char_angle
from src.constructors.build import (
    apply_isotropy,
    construct,
    construct_pi4_alternative,
    default_xi,
    randomize,
    scalar_isotropy,
)
from src.constructors.descriptor import PHI_PI4, LtsDescriptor, parse_descriptor
from src.constructors.tables import (
    FULL,
    MAXIMAL,
    container_of,
    containment_witness,
    hp_types,
    inclusion_rows,
    is_maximal,
    isometry_type_name,
    type_facts,
    valid_descriptors,
)
from src.lts.sampling import sectional_range
from src.lts.verify import is_lts, rank_of
from src.model.tangent import IsotropyElement
from src.qlinalg.quaternion import UNIT_I
from src.utils.errors import DescriptorError, DomainError, ShapeError, ValidationError


class TestConstruct:
    """Explicit bases in the standard frame"""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_every_type_is_an_lts(self, n):
        """Each valid type has the tabulated dimension and passes the closure check"""
        for d in valid_descriptors(n):
            subspace = construct(d, n)
            assert subspace.dim == d.dimension(), str(d)
            assert is_lts(subspace)[0], str(d)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_every_type_is_an_lts_large_n(self, n):
        """Dimension, rank and closure for larger n"""
        for d in valid_descriptors(n):
            subspace = construct(d, n)
            assert subspace.dim == d.dimension(), str(d)
            assert is_lts(subspace)[0], str(d)
            assert rank_of(subspace) == d.rank(), str(d)

    @pytest.mark.parametrize("n", [2, 3])
    def test_rank(self, n):
        """Computed rank agrees with the table"""
        for d in valid_descriptors(n):
            assert rank_of(construct(d, n)) == d.rank(), str(d)

    def test_accepts_strings(self):
        """Descriptor strings are parsed"""
        assert construct("Sp2", 2).dim == 10

    def test_invalid_type(self):
        """Types that do not exist at n are refused"""
        with pytest.raises(DescriptorError):
            construct("P12:H2", 4)

    @pytest.mark.parametrize("text, n", [("P12:S3", 4), ("P12:R2", 3), ("P44:C1", 2), ("S13:3", 2), ("S5", 2)])
    def test_constant_angle(self, text, n):
        """Every basis vector has the characteristic angle of the family"""
        d = parse_descriptor(text)
        for v in construct(d, n).vectors():
            assert char_angle(v) == pytest.approx(d.phi, abs=1e-9)

    @pytest.mark.parametrize(
        "text, n, kappa", [("P12:R2", 3, 0.2), ("P44:R2", 4, 0.5), ("S13:2", 2, 0.4), ("S5", 2, 2.0)]
    )
    def test_constant_curvature(self, text, n, kappa):
        """Real projective types and the spheres have constant curvature"""
        low, high = sectional_range(construct(text, n), samples=50, seed=0)
        assert low == pytest.approx(kappa, abs=1e-9)
        assert high == pytest.approx(kappa, abs=1e-9)

    def test_q3_inside_g2c2(self):
        """Q3 is a 6-dimensional subsystem of G2((C, 2))"""
        q3 = construct("Q3", 2)
        assert construct("G2:C2", 2).contains(q3)


class TestIsotropyMoves:
    """Randomized and moved copies"""

    def test_randomize_is_seeded(self):
        """The same seed gives the same subspace"""
        s = construct("P44:H1", 2)
        assert randomize(s, 7).equal(randomize(s, 7), 1e-12)

    def test_randomize_keeps_closure(self):
        """Moved systems are still Lie triple systems"""
        assert is_lts(randomize(construct("S1xS5:4", 3), 3))[0]

    def test_scalar_isotropy(self):
        """(1, i I) moves the real line system P0:R2 off itself"""
        g = scalar_isotropy(2, b2=UNIT_I)
        s = construct("P0:R2", 2)
        moved = apply_isotropy(s, g)
        assert moved.dim == 2
        assert not moved.equal(s)

    def test_apply_isotropy_n_mismatch(self):
        """Elements over another n are refused"""
        with pytest.raises(ShapeError):
            apply_isotropy(construct("S5", 2), IsotropyElement.identity(3))


class TestPi4Alternative:
    """The sets {x + J(Xi(x))}"""

    def test_complex_kind(self):
        """The C form is a constant-angle pi/4 system of dimension 2l"""
        s = construct_pi4_alternative("C", 1, 2)
        assert s.dim == 2
        assert is_lts(s)[0]
        for v in s.vectors():
            assert char_angle(v) == pytest.approx(PHI_PI4, abs=1e-9)

    def test_quaternionic_kind(self):
        """The H form has dimension 4l"""
        s = construct_pi4_alternative("H", 1, 3)
        assert s.dim == 4
        assert is_lts(s)[0]

    def test_custom_xi(self):
        """A rotated Xi is accepted"""
        c, s = np.cos(0.4), np.sin(0.4)
        rotation = np.array([[c, -s], [s, c]])
        xi = rotation @ default_xi("C", 1) @ rotation.T
        assert is_lts(construct_pi4_alternative("C", 1, 2, xi))[0]

    def test_bad_xi(self):
        """Xi with Xi^2 = id is rejected"""
        with pytest.raises(ValidationError):
            construct_pi4_alternative("C", 1, 2, np.eye(2))

    def test_bounds(self):
        """2l must not exceed n and the kind must be C or H"""
        with pytest.raises(DescriptorError):
            construct_pi4_alternative("C", 2, 3)
        with pytest.raises(DescriptorError):
            construct_pi4_alternative("R", 1, 2)

    def test_shape_of_xi(self):
        """Xi must be 2l x 2l"""
        with pytest.raises(ShapeError):
            construct_pi4_alternative("C", 1, 2, np.eye(3))


class TestTypeFacts:
    """Dimension, rank, maximality and isometry types"""

    def test_maximal_p12(self):
        """P12((H, 2)) is maximal at n = 5 and P12(S3) at n = 4"""
        assert type_facts(parse_descriptor("P12:H2"), 5).maximal
        assert is_maximal(parse_descriptor("P12:S3"), 4)
        assert not is_maximal(parse_descriptor("P12:S3"), 5)

    def test_full_space(self):
        """G2((H, n)) is all of m"""
        assert container_of(parse_descriptor("G2:H3"), 3) == FULL
        assert container_of(parse_descriptor("G2:H2"), 3) == MAXIMAL

    def test_sp2_only_maximal_at_two(self):
        """Sp2 is maximal only for n = 2"""
        assert is_maximal(LtsDescriptor.plain("Sp2"), 2)
        assert container_of(LtsDescriptor.plain("Sp2"), 3) == parse_descriptor("G2:H2")

    def test_isometry_names(self):
        """Global isometry types"""
        assert isometry_type_name(parse_descriptor("P0:H2")) == "HP^2_1"
        assert isometry_type_name(parse_descriptor("P12:S3")) == "S^3_{r=sqrt(5)/2}"
        assert isometry_type_name(parse_descriptor("S13:2")) == "S^2_{r=sqrt(10)/2}"
        assert isometry_type_name(parse_descriptor("G2:C2")) == "G_2(C^4)"

    def test_curvature_entries(self):
        """Tabulated curvature and diameter"""
        facts = type_facts(parse_descriptor("P0:H1"), 2)
        assert facts.curvature == 4.0
        assert facts.constant_curvature
        p12 = type_facts(parse_descriptor("P12:R2"), 3)
        assert p12.curvature == 0.2
        assert p12.diameter == pytest.approx(np.pi * np.sqrt(5.0) / 2.0)

    def test_to_dict(self):
        """Serialized table rows carry the descriptor string"""
        row = type_facts(parse_descriptor("PxP:H1,R1"), 2).to_dict()
        assert row["type"] == "PxP:H1,R1"
        assert row["dim"] == 5
        assert row["rank"] == 2
        assert row["maximal"] is False

    def test_invalid(self):
        """Facts are only tabulated for existing types"""
        with pytest.raises(DescriptorError):
            type_facts(parse_descriptor("P44:H2"), 2)


class TestInclusions:
    """Containment witnesses"""

    @pytest.mark.parametrize("n", [2, 3])
    def test_witnesses(self, n):
        """Every non-maximal type sits inside its container"""
        for d, container in inclusion_rows(n):
            if not isinstance(container, LtsDescriptor):
                continue
            inner, outer = containment_witness(d, n)
            assert outer.contains(inner), f"{d} in {container}"

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_witnesses_large_n(self, n):
        """Every non-maximal type sits inside its container for larger n"""
        for d, container in inclusion_rows(n):
            if isinstance(container, LtsDescriptor):
                inner, outer = containment_witness(d, n)
                assert outer.contains(inner), f"{d} in {container}"

    def test_maximal_has_no_witness(self):
        """Maximal types have no container"""
        with pytest.raises(DomainError):
            containment_witness(LtsDescriptor.plain("Sp2"), 2)

    def test_s13_in_sp2(self):
        """S13 lies in a moved copy of Sp2"""
        inner, outer = containment_witness(parse_descriptor("S13:3"), 2)
        assert outer.dim == 10
        assert outer.contains(inner)


class TestDescriptorLists:
    """Enumeration of types"""

    def test_hp_types(self):
        """S3 plus R, C, H of each dimension"""
        assert len(hp_types(2)) == 7
        assert len(hp_types(2, include_s3=False)) == 6

    def test_valid_descriptors_n2(self):
        """Types at n = 2 include the maximal Sp2 and S1xS5(5)"""
        names = {str(d) for d in valid_descriptors(2)}
        assert {"Sp2", "S1xS5:5", "S5", "Q3", "G2:H2", "P12:R1"} <= names
        assert "P12:H2" not in names
        assert all(d.is_valid(2) for d in valid_descriptors(2))
