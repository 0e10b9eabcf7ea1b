"""
Tests for validator utilities
"""

import numpy as np
import pytest

from src.utils.errors import G2LtsError, ShapeError, ValidationError
from src.utils.validators import (
    ensure_orthonormal,
    ensure_positive_tol,
    ensure_quaternion_array,
    ensure_same_n,
)


class TestEnsureQuaternionArray:
    """Test cases for ensure_quaternion_array"""

    def test_vector(self):
        """A list of quaternions becomes a float array"""
        arr = ensure_quaternion_array([[1, 0, 0, 0], [0, 1, 0, 0]])
        assert arr.shape == (2, 4)
        assert arr.dtype == float

    def test_matrix(self):
        """ndim counts the axes before the quaternion axis"""
        assert ensure_quaternion_array(np.zeros((3, 2, 4)), ndim=2).shape == (3, 2, 4)

    def test_wrong_last_axis(self):
        """Triples are not quaternions"""
        with pytest.raises(ShapeError):
            ensure_quaternion_array(np.zeros((2, 3)))

    def test_wrong_ndim(self):
        """A matrix where a vector is expected"""
        with pytest.raises(ShapeError):
            ensure_quaternion_array(np.zeros((2, 2, 4)))

    def test_non_finite(self):
        """NaN entries are rejected"""
        with pytest.raises(ValidationError):
            ensure_quaternion_array([[np.nan, 0, 0, 0]])


class TestEnsureSameN:
    """Test cases for ensure_same_n"""

    def test_common(self):
        """Equal n is returned"""
        assert ensure_same_n(3, 3, 3) == 3

    def test_mismatch(self):
        """Different n raise ShapeError"""
        with pytest.raises(ShapeError):
            ensure_same_n(2, 3)

    def test_empty(self):
        """No operands at all"""
        with pytest.raises(ShapeError):
            ensure_same_n()


class TestEnsureOrthonormal:
    """Test cases for ensure_orthonormal"""

    def test_identity_rows(self):
        """Rows of the identity are orthonormal"""
        assert ensure_orthonormal(np.eye(4)[:2]).shape == (2, 4)

    def test_single_row(self):
        """A single unit row is promoted to a matrix"""
        assert ensure_orthonormal([0.6, 0.8]).shape == (1, 2)

    def test_defect_reported(self):
        """The message names the Gram defect"""
        with pytest.raises(ValidationError, match="defect"):
            ensure_orthonormal([[1.0, 0.0], [1.0, 1.0]])


class TestEnsurePositiveTol:
    """Test cases for ensure_positive_tol"""

    def test_positive(self):
        """Positive numbers pass through as floats"""
        assert ensure_positive_tol("1e-6") == pytest.approx(1e-6)

    @pytest.mark.parametrize("tol", [0.0, -1e-3, float("nan"), float("inf")])
    def test_invalid(self, tol):
        """Zero, negative and non-finite tolerances are rejected"""
        with pytest.raises(ValidationError):
            ensure_positive_tol(tol)

    def test_errors_are_value_errors(self):
        """Every library error is a ValueError"""
        assert issubclass(ValidationError, G2LtsError)
        assert issubclass(G2LtsError, ValueError)
