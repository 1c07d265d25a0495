"""Certified upper bounds on the second Dirichlet eigenvalue of a triangle.

Transplanted-eigenfunction bounds: the first two eigenfunctions of a reference
30-60-90 or 45-45-90 triangle are pulled back through an affine map onto the
target triangle and the resulting two-dimensional trial space gives

    lambda2 <= sup_alpha (A a^2 + 2B a + C)/(D a^2 + F)   (E = 0),

evaluated in closed form as the larger root of the 2x2 pencil.  The energy and
mass coefficients A..F are closed-form polynomials in (p, q) divided by q,
with exact integer coefficients; they are transcribed below and cross-checked
against direct quadrature elsewhere (`trieig.quadrature`).

For very flat triangles an inscribed rectangle of height q*t, width 1-t with
t = 1/(1 + (4q^2)^(1/3)) gives lambda2 <= pi^2 (1 + (4q^2)^(1/3))^3 / q^2 by
domain monotonicity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .geometry import TriangleParam
from .lambda1 import BoundKind, BoundMethod, BoundResult
from .rigor import Cbrt, Interval, PI2, Var, iv_eval, precision
from .rigor.expr import Div, Expr


class Family(enum.Enum):
    T30 = "T30"
    T45 = "T45"


_p = Var("p")
_q = Var("q")

# printed closed forms of the energy/mass integrals, exact coefficients
A30_EXPR = Div(-1594323 + 604800 * PI2
               + 4 * _p * (1245184 - 713743 * _p + 100800 * (-3 + 2 * _p) * PI2)
               - 2854972 * _q**2 + 806400 * PI2 * _q**2,
               345600 * _q)
B30_EXPR = Div(-(2657205 + 4 * _p * (-1507328 + 621593 * _p) + 2486372 * _q**2),
               354816 * _q)
C30_EXPR = Div(-1594323 + _p * (6209536 - 6879600 * PI2)
               + 28 * _p**2 * (-145849 + 163800 * PI2)
               - 4083772 * _q**2 + 1146600 * PI2 * (3 + 4 * _q**2),
               1058400 * _q)
D30_EXPR = Fraction(3, 8) * _q

A45_EXPR = Div(_p * (256 - 90 * PI2) + _p**2 * (-256 + 90 * PI2)
               - 256 * _q**2 + 45 * PI2 * (1 + 2 * _q**2),
               72 * _q)
B45_EXPR = Div(512 * (1 - 2 * _p), 175 * _q)
C45_EXPR = Div(5 * PI2 * (1 - 2 * _p + 2 * _p**2 + 2 * _q**2), 4 * _q)
D45_EXPR = Fraction(1, 4) * _q

RECTANGLE_EXPR = Div(PI2 * (1 + Cbrt(4 * _q**2))**3, _q**2)

COEFF_EXPRS = {
    Family.T30: {"A": A30_EXPR, "B": B30_EXPR, "C": C30_EXPR,
                 "D": D30_EXPR, "F": D30_EXPR},
    Family.T45: {"A": A45_EXPR, "B": B45_EXPR, "C": C45_EXPR,
                 "D": D45_EXPR, "F": D45_EXPR},
}

# reference eigenvalues as multiples of pi^2, recomputed from the mode numbers
REFERENCE_EIGENVALUES = {
    Family.T30: (Fraction(112, 9), Fraction(208, 9)),
    Family.T45: (Fraction(5), Fraction(10)),
}


@dataclass(frozen=True)
class RayleighCoefficients:
    A: Interval
    B: Interval
    C: Interval
    D: Interval
    E: Interval
    F: Interval
    family: Family
    param: TriangleParam


def coeffs(t: TriangleParam, family: Family, prec: int = 128) -> RayleighCoefficients:
    """Interval evaluation of the printed coefficient formulas at (p, q)."""
    env = {"p": t.p_iv(prec), "q": t.q_iv(prec)}
    ex = COEFF_EXPRS[family]
    with precision(prec):
        vals = {k: iv_eval(e, env, prec) for k, e in ex.items()}
        zero = Interval(0)
    return RayleighCoefficients(A=vals["A"], B=vals["B"], C=vals["C"],
                                D=vals["D"], E=zero, F=vals["F"],
                                family=family, param=t)


def pencil_sup(c: RayleighCoefficients, prec: int = 128) -> Interval:
    """Largest mu with (A - mu D)(C - mu F) = B^2: the trial-space Rayleigh sup.

    This is the supremum of the quotient over the projective closure (alpha in
    R union {inf}), hence an upper bound for the supremum over finite alpha.
    """
    if not (c.D.lo > 0 and c.F.lo > 0):
        raise ValueError("mass coefficients must be certainly positive")
    with precision(prec):
        s = c.A * c.F + c.C * c.D
        disc = s**2 - 4 * c.D * c.F * (c.A * c.C - c.B**2)
        mu = (s + disc.sqrt()) / (2 * c.D * c.F)
    return mu


def transplant_upper(t: TriangleParam, family: Family,
                     prec: int = 128) -> BoundResult:
    val = pencil_sup(coeffs(t, family, prec), prec)
    method = (BoundMethod.TRANSPLANT_30 if family is Family.T30
              else BoundMethod.TRANSPLANT_45)
    return BoundResult(val, BoundKind.LAMBDA2_UPPER, method, t)


def rectangle_upper(t: TriangleParam, prec: int = 128) -> BoundResult:
    with precision(prec):
        q = t.q_iv(prec)
        if not q.hi < 4:
            raise ValueError("rectangle bound requires q < 4")
        val = iv_eval(RECTANGLE_EXPR, {"q": q}, prec)
    return BoundResult(val, BoundKind.LAMBDA2_UPPER, BoundMethod.RECTANGLE, t)


def best_upper(t: TriangleParam, prec: int = 128) -> BoundResult:
    """The upper bound with the smallest certified endpoint of the three."""
    results = [transplant_upper(t, Family.T45, prec),
               transplant_upper(t, Family.T30, prec),
               rectangle_upper(t, prec)]
    return min(results, key=lambda r: r.value.hi)
