"""Certified lower bounds on the first Dirichlet eigenvalue of a triangle.

Two bounds, both evaluated in outward-rounded interval arithmetic on the
canonical triangle (diameter 1, shortest height q):

    diameter/height:  lambda1 >= pi^2 (1/d + 1/h)^2 = pi^2 (1 + 1/q)^2
    smallest angle:   lambda1 >= theta * j_{pi/theta}^2 / (2A),  2A = q

The angle bound needs the first Bessel zero at real order pi/theta; orders are
capped at 25 (theta >= 0.126), falling back to the diameter/height bound.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import bessel
from .geometry import TriangleParam
from .rigor import Interval, constants, precision

ORDER_CAP = bessel.ORDER_CAP


class BoundKind(enum.Enum):
    LAMBDA1_LOWER = "LAMBDA1_LOWER"
    LAMBDA2_UPPER = "LAMBDA2_UPPER"


class BoundMethod(enum.Enum):
    DIAM_HEIGHT = "DIAM_HEIGHT"
    ANGLE_BESSEL = "ANGLE_BESSEL"
    TRANSPLANT_30 = "TRANSPLANT_30"
    TRANSPLANT_45 = "TRANSPLANT_45"
    RECTANGLE = "RECTANGLE"


class OrderCapError(ValueError):
    """The angle is too small for the capped Bessel order range."""


@dataclass(frozen=True)
class BoundResult:
    value: Interval
    kind: BoundKind
    method: BoundMethod
    param: TriangleParam

    @property
    def certified_lower(self) -> float:
        return float(self.value.lo)

    @property
    def certified_upper(self) -> float:
        return float(self.value.hi)


def _check_canonical(t: TriangleParam):
    p, q = t.p_iv(), t.q_iv()
    if p.lo < 0.5 or float(p.hi) > 1.0:
        raise ValueError("abscissa outside canonical range [1/2, 1]")
    # both non-base sides must not exceed the unit base (base = diameter)
    if float((p**2 + q**2).lo) > 1.0:
        raise ValueError("non-base side exceeds the diameter; not canonical")


def lower_diam_height(t: TriangleParam, prec: int = 128) -> BoundResult:
    """pi^2 (1 + 1/q)^2; valid since d = 1 and the shortest height is q."""
    with precision(prec):
        _check_canonical(t)
        q = t.q_iv(prec)
        val = constants(prec).pi2 * (1 + 1 / q) ** 2
    return BoundResult(val, BoundKind.LAMBDA1_LOWER, BoundMethod.DIAM_HEIGHT, t)


def lower_angle(t: TriangleParam, prec: int = 128,
                zero_tol=bessel.DEFAULT_ZERO_TOL,
                snap_denom: int | None = None) -> BoundResult:
    """theta j_{pi/theta}^2 / q via certified Bessel zero enclosures.

    The zero over the order range [pi/theta.hi, pi/theta.lo] is enclosed using
    the classical monotonicity of j_nu in nu applied at the endpoints.
    """
    with precision(prec):
        _check_canonical(t)
        q = t.q_iv(prec)
        theta = (q / t.p_iv(prec)).atan()
        nu = constants(prec).pi / theta
        if float(nu.hi) > ORDER_CAP:
            raise OrderCapError(
                f"order {float(nu.hi):.3f} above cap {ORDER_CAP}; "
                "use the diameter/height bound")
        j = bessel.zero_over_orders(nu.lo, nu.hi, zero_tol, prec, snap_denom)
        val = theta * j * j / q
    return BoundResult(val, BoundKind.LAMBDA1_LOWER, BoundMethod.ANGLE_BESSEL, t)


def best_lower(t: TriangleParam, prec: int = 128,
               zero_tol=bessel.DEFAULT_ZERO_TOL,
               snap_denom: int | None = None) -> BoundResult:
    """The applicable lower bound with the largest certified endpoint."""
    results = [lower_diam_height(t, prec)]
    try:
        results.append(lower_angle(t, prec, zero_tol, snap_denom))
    except OrderCapError:
        pass
    return max(results, key=lambda r: r.value.lo)
