"""
Tests for frames, restricted roots, characteristic angles and the Jacobi spectrum
"""

import numpy as np
import pytest

from src.cartan.angles import canonical_representation, char_angle, isotropy_between
from src.cartan.frame import (
    RootLabel,
    is_cartan,
    m_vector,
    root_data,
    standard_frame,
    transform_frame,
)
from src.cartan.identities import IDENTITIES, identity_residuals
from src.cartan.spectrum import cluster_eigenvalues, jacobi_spectrum
from src.model.curvature import curvature, isotropy_act, metric
from src.model.tangent import IsotropyElement, TangentVector
from src.qlinalg.quaternion import UNIT_I
from src.utils.errors import DomainError, ValidationError


def multiplicities(n):
    return {d.label.key: d.multiplicity for d in root_data(standard_frame(n))}


class TestFrames:
    """Adapted frames"""

    def test_standard_frame_relations(self):
        """A^2 = id, J^2 = -id and the basis relations hold exactly"""
        assert standard_frame(3).defect() == pytest.approx(0.0)

    def test_standard_frame_needs_n_two(self):
        """n = 1 has no frame"""
        with pytest.raises(DomainError):
            standard_frame(1)

    def test_transformed_frame(self):
        """The image of a frame under the isotropy group is a frame"""
        rng = np.random.default_rng(0)
        g = IsotropyElement.random(3, rng)
        frame = transform_frame(standard_frame(3), g.b1, g.b2)
        assert frame.defect() < 1e-9
        assert frame.h_plus.allclose(isotropy_act(g, standard_frame(3).h_plus), 1e-10)

    def test_m_vector_sign(self):
        """eps must be +1 or -1"""
        with pytest.raises(DomainError):
            m_vector(standard_frame(2), UNIT_I, 0)

    def test_cartan_pairs(self):
        """H+, H- commute; H+ and H+ . i do not"""
        frame = standard_frame(2)
        assert is_cartan(frame.h_plus, frame.h_minus)
        assert not is_cartan(frame.h_plus, frame.h_plus_times(UNIT_I))


class TestRootData:
    """Root space decomposition of m"""

    def test_multiplicities_n2(self):
        """lambda1 and lambda2 vanish at n = 2"""
        assert multiplicities(2) == {"lambda3": 4, "lambda4": 4, "2lambda1": 3, "2lambda2": 3}

    def test_multiplicities_n3(self):
        """4, 4, 4, 4, 3, 3 at n = 3"""
        m = multiplicities(3)
        assert [m[key] for key in ("lambda1", "lambda2", "lambda3", "lambda4", "2lambda1", "2lambda2")] == [
            4, 4, 4, 4, 3, 3,
        ]

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_multiplicity_growth(self, n):
        """lambda1 and lambda2 have multiplicity 4n - 8"""
        m = multiplicities(n)
        assert m["lambda1"] == m["lambda2"] == 4 * n - 8

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_root_spaces_fill_the_complement_of_a(self, n):
        """The root spaces are orthogonal and together with a span m"""
        data = root_data(standard_frame(n))
        rows = np.vstack([d.basis.reshape(d.multiplicity, -1) for d in data])
        assert rows.shape[0] == 8 * n - 2
        assert np.allclose(rows @ rows.T, np.eye(rows.shape[0]), atol=1e-10)

    def test_jacobi_eigenvalues(self):
        """R(X, H)H = lambda(H)^2 X on every root space"""
        frame = standard_frame(3)
        h = frame.h_plus * np.cos(0.3) + frame.h_minus * np.sin(0.3)
        for datum in root_data(frame):
            value = datum.label.value_at(frame, h)
            for x in datum.vectors():
                assert curvature(x, h, h).allclose(x * value ** 2, 1e-10)

    def test_label_lookup(self):
        """Labels are found by key"""
        assert RootLabel.from_key("2lambda2") is RootLabel.TWO_LAMBDA2
        with pytest.raises(DomainError):
            RootLabel.from_key("lambda5")


class TestCharacteristicAngle:
    """phi in [0, pi/4]"""

    def test_cartan_directions(self):
        """cos(t) H+ + sin(t) H- has angle t"""
        frame = standard_frame(2)
        for t in (0.0, 0.3, np.arctan(0.5), np.pi / 4):
            v = frame.h_plus * np.cos(t) + frame.h_minus * np.sin(t)
            assert char_angle(v) == pytest.approx(t, abs=1e-7)

    def test_isotropy_invariant(self):
        """The angle is constant on isotropy orbits"""
        rng = np.random.default_rng(1)
        v = TangentVector(rng.standard_normal((3, 2, 4)))
        g = IsotropyElement.random(3, rng)
        assert char_angle(isotropy_act(g, v)) == pytest.approx(char_angle(v))

    def test_zero_vector(self):
        """The zero vector has no angle"""
        with pytest.raises(DomainError):
            char_angle(TangentVector.zeros(2))


class TestCanonicalRepresentation:
    """v = |v| (cos(phi) H+ + sin(phi) H-)"""

    def test_random_vector(self):
        """A generic vector is reconstructed from its frame"""
        v = TangentVector(np.random.default_rng(2).standard_normal((3, 2, 4)))
        form = canonical_representation(v)
        assert form.phi == pytest.approx(char_angle(v))
        assert form.norm == pytest.approx(v.norm())
        assert not form.non_canonical

    def test_zero_angle_flagged(self):
        """At phi = 0 the completion of H- is flagged"""
        form = canonical_representation(standard_frame(3).h_plus * 2.0)
        assert form.non_canonical
        assert form.phi == pytest.approx(0.0)

    def test_isotropy_between(self):
        """isotropy_between maps u to g u"""
        rng = np.random.default_rng(3)
        u = TangentVector(rng.standard_normal((3, 2, 4)))
        v = isotropy_act(IsotropyElement.random(3, rng), u)
        g = isotropy_between(u, v)
        assert isotropy_act(g, u).allclose(v, 1e-7)

    def test_isotropy_between_different_orbits(self):
        """Different norms or angles raise DomainError"""
        frame = standard_frame(2)
        with pytest.raises(DomainError):
            isotropy_between(frame.h_plus, frame.h_plus * 2.0)
        with pytest.raises(DomainError):
            isotropy_between(frame.h_plus, (frame.h_plus + frame.h_minus) / np.sqrt(2.0))

    def test_isotropy_between_nearby_angles(self):
        """Angles that pass the orbit check but differ leave a residual that is reported"""
        frame = standard_frame(2)
        phi = 1e-5
        v = frame.h_plus * np.cos(phi) + frame.h_minus * np.sin(phi)
        with pytest.raises(ValidationError):
            isotropy_between(frame.h_plus, v)

    def test_small_angle_is_canonical(self):
        """phi = 1e-6 is resolved with a determined H-"""
        rng = np.random.default_rng(12)
        frame = standard_frame(3)
        phi = 1e-6
        v = isotropy_act(IsotropyElement.random(3, rng), frame.h_plus * np.cos(phi) + frame.h_minus * np.sin(phi))
        form = canonical_representation(v)
        assert not form.non_canonical
        assert form.phi == pytest.approx(phi, rel=1e-6)


class TestZeroAngleInGeneralPosition:
    """Vectors of angle 0 moved off the standard frame"""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_moved_h_plus(self, n):
        """Isotropy images of H+ have angle 0 and rebuild from a completed frame"""
        rng = np.random.default_rng(n)
        h = standard_frame(n).h_plus
        for _ in range(30):
            v = isotropy_act(IsotropyElement.random(n, rng), h) * 1.7
            form = canonical_representation(v)
            assert form.non_canonical
            assert form.phi == 0.0
            assert form.norm == pytest.approx(1.7)
            assert form.frame.defect() < 1e-8
            assert (form.frame.h_plus * form.norm).allclose(v, 1e-8)

    def test_isotropy_between_moved_copies(self):
        """Two moved copies of H+ are related by an isotropy element"""
        rng = np.random.default_rng(11)
        h = standard_frame(3).h_plus
        for _ in range(10):
            u = isotropy_act(IsotropyElement.random(3, rng), h)
            v = isotropy_act(IsotropyElement.random(3, rng), h)
            g = isotropy_between(u, v)
            assert isotropy_act(g, u).allclose(v, 1e-7)


class TestJacobiSpectrum:
    """Eigenvalues of X -> R(X, H)H"""

    def test_spectrum_of_h_plus(self):
        """At n = 3: 0 on a + m_lambda2 + m_2lambda2, 1 on lambda1, lambda3, lambda4, 4 on 2 lambda1"""
        spectrum = jacobi_spectrum(standard_frame(3).h_plus)
        values = [value for value, _ in spectrum]
        assert values == pytest.approx([0.0, 1.0, 4.0], abs=1e-8)
        assert [mult for _, mult in spectrum] == [9, 12, 3]

    def test_zero_h(self):
        """H = 0 is rejected"""
        with pytest.raises(DomainError):
            jacobi_spectrum(TangentVector.zeros(2))

    def test_cluster(self):
        """Neighbours within tol merge"""
        assert cluster_eigenvalues(np.array([1.0, 0.0, 1.0 + 1e-9]), 1e-6) == [(0.0, 1), (pytest.approx(1.0), 2)]


class TestRootIdentities:
    """Closed forms of the curvature between root spaces"""

    @pytest.mark.parametrize("n", [2, 3])
    def test_standard_frame(self, n):
        """Every identity holds in the standard frame"""
        residuals = identity_residuals(standard_frame(n), draws=100)
        assert set(residuals) == set(IDENTITIES)
        assert max(residuals.values()) < 1e-10

    def test_random_frame(self):
        """Every identity holds in a moved frame"""
        g = IsotropyElement.random(3, np.random.default_rng(4))
        frame = transform_frame(standard_frame(3), g.b1, g.b2)
        assert max(identity_residuals(frame, draws=100, seed=1).values()) < 1e-9

    def test_cartan_metric(self):
        """H+ and H- are orthonormal"""
        frame = standard_frame(4)
        assert metric(frame.h_plus, frame.h_minus) == pytest.approx(0.0)
        assert metric(frame.h_plus, frame.h_plus) == pytest.approx(1.0)
