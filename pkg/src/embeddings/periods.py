"""
Maximal tori, closed geodesics and their periods.

A geodesic through V' with initial velocity cos(t) H+ + sin(t) H- runs in
the maximal torus exp(a) V', a flat torus R^2 / (pi Z)^2.  It closes iff
tan(t) is rational.
"""

from fractions import Fraction
from typing import Optional, Tuple, Union

import numpy as np

from ..cartan.frame import Frame, standard_frame
from ..lts.subspace import RealSubspace
from ..model.geodesic import geodesic_at, plane_intersection_dim
from ..model.tangent import Plane, TangentVector
from ..utils.errors import DomainError
from ..utils.logger import logger

INFINITE = "infinite"
MAX_DENOMINATOR = 1000
RATIONAL_TOL = 1e-9

Period = Union[float, str]


def rational_slope(t: float) -> Optional[Tuple[int, int]]:
    """``(p, q)`` in lowest terms with tan(t) = p/q, or None if tan(t) is not rational."""
    if not -RATIONAL_TOL <= t <= np.pi / 4 + RATIONAL_TOL:
        raise DomainError(f"Geodesic parameter must lie in [0, pi/4], got {t}")
    slope = float(np.tan(max(t, 0.0)))
    fraction = Fraction(slope).limit_denominator(MAX_DENOMINATOR)
    if abs(slope - float(fraction)) > RATIONAL_TOL:
        return None
    return fraction.numerator, fraction.denominator


def geodesic_period(t: float) -> Period:
    """
    Period of the unit speed geodesic with characteristic angle t.

    Args:
        t: Angle in [0, pi/4]

    Returns:
        pi sqrt(p^2 + q^2) for tan(t) = p/q in lowest terms, else ``"infinite"``
    """
    slope = rational_slope(t)
    if slope is None:
        logger.debug(f"tan({t}) is not rational up to denominator {MAX_DENOMINATOR}")
        return INFINITE
    p, q = slope
    return float(np.pi * np.hypot(p, q))


def torus_direction(t: float, n: int = 2) -> TangentVector:
    """The unit vector cos(t) H+ + sin(t) H- of the standard frame."""
    frame = standard_frame(n)
    return frame.h_plus * np.cos(t) + frame.h_minus * np.sin(t)


def returns_to_origin(v: TangentVector, s: float, tol: float = 1e-6) -> bool:
    """Whether the geodesic with velocity v is back at V' at time s."""
    return plane_intersection_dim(geodesic_at(v, s), Plane.origin(v.n), tol) == 2


def period_check(t: float, samples: int = 50, n: int = 2) -> Tuple[bool, int]:
    """
    Cross-check of :func:`geodesic_period` against the geodesic itself.

    Returns:
        ``(returns_at_period, early_returns)``: whether the geodesic is at V'
        at the predicted period, and at how many of ``samples`` equally spaced
        earlier times it already is
    """
    period = geodesic_period(t)
    if period == INFINITE:
        raise DomainError(f"The geodesic at t={t} is not closed")
    v = torus_direction(t, n)
    closes = returns_to_origin(v, float(period))
    times = np.linspace(0.0, float(period), samples + 2)[1:-1]
    early = sum(returns_to_origin(v, float(s)) for s in times)
    logger.debug(f"Period {period:.12f} at t={t}: closes={closes}, early returns={early}")
    return closes, int(early)


def maximal_torus_tangent(frame: Optional[Frame] = None, n: int = 2) -> RealSubspace:
    """The Cartan subalgebra span{H+, H-}, tangent to a maximal torus."""
    frame = standard_frame(n) if frame is None else frame
    return RealSubspace.from_vectors([frame.h_plus, frame.h_minus], frame.n)


def torus_distance(x: np.ndarray, y: np.ndarray) -> float:
    """Distance on the flat torus R^2 / (pi Z)^2."""
    diff = np.mod(np.asarray(y, dtype=float) - np.asarray(x, dtype=float), np.pi)
    return float(np.linalg.norm(np.minimum(diff, np.pi - diff)))


def torus_diameter(grid: int = 64) -> float:
    """Largest distance from the origin over a grid containing the midpoint (pi/2, pi/2)."""
    if grid % 2:
        raise DomainError("The grid size must be even")
    ticks = np.linspace(0.0, np.pi, grid + 1)
    origin = np.zeros(2)
    return max(torus_distance(origin, np.array([a, b])) for a in ticks for b in ticks)


def diameter_excess(t: float) -> float:
    """Half the period at t minus the diameter of the maximal torus."""
    period = geodesic_period(t)
    if period == INFINITE:
        raise DomainError(f"The geodesic at t={t} is not closed")
    return float(period) / 2.0 - torus_diameter()
