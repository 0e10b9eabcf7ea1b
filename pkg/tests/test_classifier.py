"""
Tests for recognizing the type of a Lie triple system
"""

import numpy as np
import pytest

from src.constructors.build import construct, construct_pi4_alternative, randomize
from src.constructors.classifier import (
    classify,
    descriptor_from_multiplicities,
    normalized_multiplicities,
    same_type,
)
from src.constructors.descriptor import LtsDescriptor, parse_descriptor
from src.constructors.tables import valid_descriptors
from src.lts.subspace import RealSubspace
from src.lts.verify import is_lts
from src.utils.errors import DomainError


class TestMultiplicities:
    """Rank-two types from restricted root multiplicities"""

    def test_normalization(self):
        """lambda1/lambda2 and lambda3/lambda4 are put in a fixed order"""
        m = normalized_multiplicities({"lambda2": 4, "2lambda2": 3, "lambda4": 2})
        assert m == (4, 0, 2, 0, 3, 0)

    @pytest.mark.parametrize(
        "m, text",
        [
            ((4, 4, 4, 4, 3, 3), "G2:H3"),
            ((2, 2, 2, 2, 1, 1), "G2:C3"),
            ((0, 0, 1, 1, 0, 0), "G2:R2"),
            ((0, 0, 2, 2, 2, 2), "Sp2"),
            ((0, 0, 1, 1, 1, 1), "Q3"),
            ((0, 0, 3, 0, 0, 0), "S1xS5:4"),
            ((4, 0, 0, 0, 3, 0), "PxP:H2,R1"),
            ((0, 0, 0, 0, 0, 0), "PxP:R1,R1"),
        ],
    )
    def test_known_types(self, m, text):
        """Multiplicity patterns of the rank-two families"""
        assert descriptor_from_multiplicities(m) == parse_descriptor(text).canonical()

    def test_unknown_pattern(self):
        """Patterns without a type raise DomainError"""
        with pytest.raises(DomainError):
            descriptor_from_multiplicities((0, 0, 3, 1, 0, 0))


class TestSameType:
    """Type equality up to identifications"""

    def test_geo_tolerance(self):
        """Geo parameters are compared with a tolerance"""
        assert same_type(LtsDescriptor.geo(0.3), LtsDescriptor.geo(0.3 + 1e-9))
        assert not same_type(LtsDescriptor.geo(0.3), LtsDescriptor.geo(0.31))

    def test_identifications(self):
        """Geo at angle 0 is P0((R, 1)) and PxP factors commute"""
        assert same_type(LtsDescriptor.geo(0.0), parse_descriptor("P0:R1"))
        assert same_type(parse_descriptor("PxP:R1,H2"), parse_descriptor("PxP:H2,R1"))
        assert not same_type(parse_descriptor("P0:H1"), parse_descriptor("P44:H1"))


class TestClassify:
    """classify(construct(d)) recovers d"""

    def test_zero_space(self):
        """The zero space has no type"""
        with pytest.raises(DomainError):
            classify(RealSubspace.zero(2))

    def test_not_an_lts(self):
        """Non-closed input raises DomainError"""
        rows = np.random.default_rng(0).standard_normal((3, 16))
        with pytest.raises(DomainError):
            classify(RealSubspace.from_flat(rows, 2))

    def test_round_trip_n2(self):
        """Every type at n = 2"""
        for d in valid_descriptors(2):
            assert same_type(classify(construct(d, 2)), d), str(d)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [3, 4])
    def test_round_trip_larger_n(self, n):
        """Every type at n = 3 and n = 4"""
        for d in valid_descriptors(n):
            assert same_type(classify(construct(d, n)), d), str(d)

    @pytest.mark.parametrize("text, n, seed", [("P12:C1", 3, 5), ("Sp2", 2, 1), ("G2:C2", 3, 2), ("S13:3", 2, 4)])
    def test_isotropy_invariance(self, text, n, seed):
        """Randomly moved copies have the same type"""
        d = parse_descriptor(text)
        assert same_type(classify(randomize(construct(d, n), seed)), d)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_randomized_round_trip(self, n):
        """Every type at n, moved by five seeded isotropy elements, keeps closure and type"""
        for d in valid_descriptors(n):
            base = construct(d, n)
            for seed in range(5):
                moved = randomize(base, seed)
                assert is_lts(moved)[0], f"{d} seed {seed}"
                assert same_type(classify(moved), d), f"{d} seed {seed}"

    def test_tolerance_reaches_closure_check(self):
        """A slightly perturbed system is refused at the default tol and typed at a loose one"""
        base = construct("P0:H1", 2)
        noise = np.random.default_rng(14).standard_normal(base.flat.shape)
        noise *= 1e-7 / np.linalg.norm(noise, axis=1, keepdims=True)
        perturbed = RealSubspace.from_flat(base.flat + noise, 2)
        with pytest.raises(DomainError):
            classify(perturbed)
        assert same_type(classify(perturbed, tol=1e-5), parse_descriptor("P0:H1"))

    def test_alternative_pi4_forms(self):
        """The sets {x + J(Xi(x))} are P44 types"""
        assert classify(construct_pi4_alternative("C", 1, 2)) == parse_descriptor("P44:C1")
        assert classify(construct_pi4_alternative("H", 1, 2)) == parse_descriptor("P44:H1")

    def test_geo_angle(self):
        """A line recovers its characteristic angle"""
        result = classify(construct("Geo:t=0.3", 2))
        assert result.family == "Geo"
        assert result.t == pytest.approx(0.3, abs=1e-7)
