"""Triangle moduli coordinates, classification, and proof-area labeling.

A triangle is normalized so its longest side (the diameter, scaled to 1) lies
on the segment (0,0)-(1,0) and the apex (p, q) sits in p >= 1/2, q > 0.
Right and obtuse triangles fill the quarter disc (p - 1/2)^2 + q^2 <= 1/4;
the replayable proof splits it into Areas I-IV.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .rigor import Interval, get_precision

RIGHT_ANGLE_TOL = Fraction(1, 10**12)
DEGENERATE_Q = Fraction(1, 10**9)

# Area boundaries: q >= 0.156, p <= 0.65, and the segment q = 1.7 p - 1.38
Q_SPLIT = Fraction(39, 250)
P_SPLIT = Fraction(13, 20)
SEG_SLOPE = Fraction(17, 10)
SEG_OFFSET = Fraction(69, 50)


class DegenerateTriangleError(ValueError):
    pass


class TriangleClass(enum.Enum):
    ACUTE = "ACUTE"
    RIGHT = "RIGHT"
    OBTUSE = "OBTUSE"


class AreaLabel(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    ACUTE = "ACUTE"


def _as_coord(x):
    """Accept Fraction / int / float / str exactly; Interval passes through."""
    if isinstance(x, (Fraction, Interval)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)  # binary floats are exact rationals
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"unsupported coordinate type {type(x).__name__}")


@dataclass(frozen=True)
class TriangleParam:
    """Apex coordinates (p, q) of a diameter-normalized triangle.

    p and q are exact Fractions whenever possible; q may be an Interval for
    irrational apexes (e.g. q = sqrt(3)/4).
    """

    p: object
    q: object

    def __post_init__(self):
        object.__setattr__(self, "p", _as_coord(self.p))
        object.__setattr__(self, "q", _as_coord(self.q))
        q = self.q
        if isinstance(q, Fraction):
            if q <= 0:
                raise DegenerateTriangleError("apex ordinate must be positive")
        elif q.lo <= 0:
            raise DegenerateTriangleError("apex ordinate must be positive")

    # -- interval views ------------------------------------------------

    def p_iv(self, prec=None) -> Interval:
        return self.p if isinstance(self.p, Interval) else Interval(self.p)

    def q_iv(self, prec=None) -> Interval:
        return self.q if isinstance(self.q, Interval) else Interval(self.q)

    def q_sq(self):
        """Exact q^2 when available (Fraction), else an Interval."""
        if isinstance(self.q, Fraction):
            return self.q * self.q
        return self.q ** 2

    def as_floats(self) -> tuple:
        p = float(self.p) if isinstance(self.p, Fraction) else self.p.mid()
        q = float(self.q) if isinstance(self.q, Fraction) else self.q.mid()
        return p, q

    def is_exact(self) -> bool:
        return isinstance(self.p, Fraction) and isinstance(self.q, Fraction)


@dataclass(frozen=True)
class TriangleGeometry:
    """Derived quantities of a canonical triangle (diameter normalized to 1)."""

    diameter: Fraction
    height: object        # shortest height = q
    area: object          # q / 2
    theta: Interval       # smallest angle, at the origin vertex
    tri_class: TriangleClass


def _cmp(lhs, rhs) -> int:
    """-1 / 0 / +1 comparison for Fractions, exact."""
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0


def _q_vs(t: TriangleParam, bound: Fraction) -> int:
    """Compare q against a nonnegative rational bound; exact when possible."""
    if isinstance(t.q, Fraction):
        return _cmp(t.q, bound)
    q = t.q
    if q.hi < bound:
        return -1
    if q.lo > bound:
        return 1
    # fall back to the exact square when the interval straddles the bound
    raise ValueError("q interval straddles the comparison bound; "
                     "construct the triangle with exact coordinates")


def canonicalize(v1, v2, v3, prec=None):
    """Map an arbitrary triangle onto its canonical (p, q) moduli point.

    Returns (TriangleParam, scale) where scale is the original diameter:
    eigenvalues transform as lambda(original) = lambda(canonical) / scale**2.
    """
    pts = [tuple(Fraction(c) if not isinstance(c, Fraction) else c for c in v)
           for v in (v1, v2, v3)]
    for v in pts:
        if len(v) != 2:
            raise ValueError("vertices must be planar points")
    (x1, y1), (x2, y2), (x3, y3) = pts
    cross = (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)
    if cross == 0:
        raise DegenerateTriangleError("degenerate triangle: collinear vertices")

    def d2(a, b):
        return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2

    sides = [(d2(pts[1], pts[2]), 0), (d2(pts[0], pts[2]), 1),
             (d2(pts[0], pts[1]), 2)]
    _, apex_idx = max(sides, key=lambda s: (s[0], -s[1]))
    apex = pts[apex_idx]
    base = [pts[i] for i in range(3) if i != apex_idx]
    a, b = base
    dd = d2(a, b)  # squared diameter, exact
    # p q from exact dot/cross products in base coordinates
    ux, uy = b[0] - a[0], b[1] - a[1]
    wx, wy = apex[0] - a[0], apex[1] - a[1]
    p = (ux * wx + uy * wy) / dd
    q_sq = d2(a, apex) / dd - p * p
    if p < Fraction(1, 2):
        p = 1 - p
    q = _exact_sqrt(q_sq)
    if q is None:
        q = _sqrt_interval(q_sq, prec)
        if q.hi < DEGENERATE_Q:
            raise DegenerateTriangleError("degenerate triangle: zero height")
    elif q < DEGENERATE_Q:
        raise DegenerateTriangleError("degenerate triangle: zero height")
    scale = math.sqrt(float(dd))
    return TriangleParam(p, q), scale


def _exact_sqrt(x: Fraction):
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _sqrt_interval(x: Fraction, prec=None) -> Interval:
    return Interval(x).sqrt()


def circle_residual(t: TriangleParam):
    """(p - 1/2)^2 + q^2 - 1/4: zero on the right-triangle circle, exact if possible."""
    if t.is_exact():
        return (t.p - Fraction(1, 2)) ** 2 + t.q * t.q - Fraction(1, 4)
    return (t.p_iv() - Fraction(1, 2)) ** 2 + t.q_sq() - Fraction(1, 4)


def classify(t: TriangleParam) -> TriangleClass:
    """RIGHT on the circle (within tolerance), OBTUSE inside, ACUTE outside."""
    r = circle_residual(t)
    if isinstance(r, Fraction):
        if r == 0:
            return TriangleClass.RIGHT
        return TriangleClass.OBTUSE if r < 0 else TriangleClass.ACUTE
    if r.hi < -RIGHT_ANGLE_TOL:
        return TriangleClass.OBTUSE
    if r.lo > RIGHT_ANGLE_TOL:
        return TriangleClass.ACUTE
    return TriangleClass.RIGHT


def geometry_of(t: TriangleParam, prec=None) -> TriangleGeometry:
    theta = (t.q_iv(prec) / t.p_iv(prec)).atan()
    half = Fraction(1, 2)
    area = t.q * half if isinstance(t.q, Fraction) else t.q_iv(prec) * half
    return TriangleGeometry(diameter=Fraction(1), height=t.q, area=area,
                            theta=theta, tri_class=classify(t))


def area_label(t: TriangleParam) -> AreaLabel:
    """Assign to Areas I-IV (right/obtuse) with tie priority I > II > III > IV."""
    if classify(t) is TriangleClass.ACUTE:
        return AreaLabel.ACUTE
    p, q = t.p, t.q
    if not isinstance(p, Fraction):
        raise ValueError("area_label requires an exact abscissa")
    q_ge_split = _q_vs(t, Q_SPLIT) >= 0
    if q_ge_split and p <= P_SPLIT:
        return AreaLabel.I
    seg = SEG_SLOPE * p - SEG_OFFSET
    if q_ge_split:
        seg_cmp = _q_vs(t, seg) if seg > 0 else 1
        if seg_cmp >= 0:
            return AreaLabel.II
        return AreaLabel.III
    return AreaLabel.IV


def altitudes_and_angles(t: TriangleParam) -> tuple:
    """All three altitudes and vertex angles (floats, for sanity checks)."""
    p, q = t.as_floats()
    verts = [(0.0, 0.0), (1.0, 0.0), (p, q)]
    sides = []  # side lengths opposite each vertex
    for i in range(3):
        a, b = verts[(i + 1) % 3], verts[(i + 2) % 3]
        sides.append(math.hypot(a[0] - b[0], a[1] - b[1]))
    area = 0.5 * q
    alts = [2.0 * area / s for s in sides]
    angles = []
    for i in range(3):
        a, b, c = sides[i], sides[(i + 1) % 3], sides[(i + 2) % 3]
        angles.append(math.acos(max(-1.0, min(1.0, (b * b + c * c - a * a) / (2 * b * c)))))
    return alts, angles
