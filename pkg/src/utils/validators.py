"""
Input validation utilities for g2lts
"""

from typing import Any, Sequence

import numpy as np

from .errors import ShapeError, ValidationError


def ensure_quaternion_array(value: Any, ndim: int = 1) -> np.ndarray:
    """
    Convert to a float array of quaternions in the ``(..., 4)`` layout.

    Args:
        value: Array-like input
        ndim: Number of leading axes before the quaternion axis

    Returns:
        Float array of shape ``(d_1, ..., d_ndim, 4)``

    Raises:
        ShapeError: if the layout does not match
    """
    arr = np.asarray(value, dtype=float)
    if arr.ndim != ndim + 1 or arr.shape[-1] != 4:
        raise ShapeError(f"Expected {ndim} axes of quaternions (..., 4), got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("Quaternion array contains non-finite entries")
    return arr


def ensure_same_n(*ns: int) -> int:
    """
    Check that all operands live over the same n.

    Returns:
        The common n

    Raises:
        ShapeError: on a mismatch or an empty argument list
    """
    if not ns:
        raise ShapeError("No operands given")
    if len(set(ns)) != 1:
        raise ShapeError(f"Operands live over different n: {sorted(set(ns))}")
    return ns[0]


def ensure_orthonormal(rows: Sequence[Sequence[float]], tol: float = 1e-10) -> np.ndarray:
    """
    Check that the rows of a real matrix are orthonormal.

    Raises:
        ValidationError: naming the largest Gram defect
    """
    arr = np.atleast_2d(np.asarray(rows, dtype=float))
    defect = float(np.max(np.abs(arr @ arr.T - np.eye(arr.shape[0])), initial=0.0))
    if defect > tol:
        raise ValidationError(f"Rows are not orthonormal (defect {defect:.3e})")
    return arr


def ensure_positive_tol(tol: float) -> float:
    """
    Raises:
        ValidationError: if the tolerance is not a positive finite number
    """
    value = float(tol)
    if not np.isfinite(value) or value <= 0:
        raise ValidationError(f"Tolerance must be a positive number, got {tol!r}")
    return value
