"""Validated Bessel J_nu evaluation and enclosures of the first positive zero.

J_nu is evaluated by the ascending series

    J_nu(x) = (x/2)^nu * sum_k (-1)^k (x/2)^(2k) / (k! Gamma(nu+k+1))

in interval arithmetic with a truncation remainder from the alternating-series
bound (term magnitudes are eventually strictly decreasing).  Working precision
is raised with x to absorb the cancellation of the partial sums, so enclosures
stay tight up to x = 60 and nu = 25.  Gamma(nu+1) comes from MPFR's correctly
rounded gamma; later coefficients follow by the exact recurrence.

First zeros are bracketed by stepping x upward from max(nu, 1) in steps of 1/4
until a sign change is certified, then refined by interval bisection.  The
stepping start is sound because J_nu > 0 on (0, max(nu, 1)]: the first zero
exceeds both the order and j_0 = 2.40..  These classical facts (and the
monotonicity of j_nu in nu used by callers) are recorded as assumed lemmas in
certificates.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from gmpy2 import mpfr

from .rigor import Interval, gamma_point, precision
from .rigor.interval import _down, _up

ORDER_CAP = 25
X_CAP = 60
DEFAULT_ZERO_TOL = Fraction(1, 10**10)

_SIGN_LADDER = (48, 96, 192, 320)


class PrecisionExhausted(ArithmeticError):
    pass


class BracketFailure(ArithmeticError):
    pass


@dataclass(frozen=True)
class BesselZeroEnclosure:
    """Certified enclosure of j_nu: J_nu > 0 certified at z.lo, < 0 at z.hi."""

    nu: Fraction
    z: Interval


def _as_order(nu) -> Fraction:
    if isinstance(nu, int):
        return Fraction(nu)
    if isinstance(nu, Fraction):
        return nu
    if isinstance(nu, float):
        return Fraction(nu)
    if isinstance(nu, mpfr):
        return Fraction(*nu.as_integer_ratio())
    raise TypeError(f"order must be an exact scalar, got {type(nu).__name__}")


def bessel_j(nu, x, prec: int = 128) -> Interval:
    """Enclosure of {J_nu(t) : t in x} for scalar order nu >= 0, x in [0, 60]."""
    nu = _as_order(nu)
    if nu < 0:
        raise ValueError("order must be nonnegative")
    x_iv = x if isinstance(x, Interval) else Interval(x)
    if x_iv.lo < 0:
        raise ValueError("argument must be nonnegative")
    if x_iv.hi > X_CAP:
        raise ValueError(f"argument above {X_CAP} is outside the supported range")
    # guard bits against cancellation: the largest series term is ~exp(x)
    work = prec + int(1.45 * float(x_iv.hi)) + 32
    with precision(work):
        half = x_iv * Fraction(1, 2)
        h2 = half * half
        term = Interval(1) / gamma_point(nu + 1, work)
        total = term
        t_max = term.hi
        d, u = _down(work), _up(work)
        floor = u.mul(max(t_max, mpfr(1)), mpfr(2) ** (-work + 6))
        k = 0
        while True:
            k += 1
            term = term * h2 / Interval(Fraction(k) * (nu + k))
            total = (total - term) if k % 2 else (total + term)
            if term.hi > t_max:
                t_max = term.hi
                floor = u.mul(t_max, mpfr(2) ** (-work + 6))
            # magnitude ratio of consecutive terms, decreasing in k
            den = Interval(Fraction(k + 1) * (nu + k + 1))
            ratio = u.div(h2.hi, den.lo)
            if ratio < 0.5:
                next_bound = u.mul(term.hi, ratio)
                if next_bound <= floor:
                    total = total + Interval(-next_bound, next_bound)
                    break
            if k > 4000:
                raise PrecisionExhausted(
                    f"series for J_{float(nu)} did not converge at {work} bits")
        pref = half.pow_scalar(nu) if nu else Interval(1)
        return pref * total


def _certified_sign(nu: Fraction, x: Fraction, prec: int) -> int:
    """+1 / -1 when the sign of J_nu(x) is certified, 0 when undecided."""
    for bits in (*(b for b in _SIGN_LADDER if b < prec + 64), prec + 64):
        v = bessel_j(nu, Interval(x), bits)
        if v.lo > 0:
            return 1
        if v.hi < 0:
            return -1
    return 0


_zero_cache: dict = {}
_zero_lock = threading.Lock()


def first_zero(nu, tol=DEFAULT_ZERO_TOL, prec: int = 128) -> BesselZeroEnclosure:
    """Enclosure of the first positive zero of J_nu with width <= tol."""
    nu = _as_order(nu)
    if nu < 0:
        raise ValueError("order must be nonnegative")
    if nu > ORDER_CAP:
        raise ValueError(f"order above {ORDER_CAP} is outside the supported range")
    tol = Fraction(tol)
    key = (nu, tol, prec)
    with _zero_lock:
        hit = _zero_cache.get(key)
    if hit is not None:
        return hit
    enc = _first_zero_uncached(nu, tol, prec)
    with _zero_lock:
        _zero_cache[key] = enc
    return enc


def clear_zero_cache():
    with _zero_lock:
        _zero_cache.clear()


def _first_zero_uncached(nu, tol, prec) -> BesselZeroEnclosure:
    step = Fraction(1, 4)
    x = max(nu, Fraction(1))
    if _certified_sign(nu, x, prec) <= 0:
        raise PrecisionExhausted(f"could not certify J > 0 at the start point {x}")
    while True:
        nxt = x + step
        if nxt > X_CAP:
            raise BracketFailure(f"no sign change of J_{float(nu)} below {X_CAP}")
        s = _certified_sign(nu, nxt, prec)
        if s == 0:
            # stepped (numerically) onto the zero; nudge the grid point
            nxt += Fraction(1, 64)
            s = _certified_sign(nu, nxt, prec)
            if s == 0:
                raise PrecisionExhausted("sign undecided at bracket point")
        if s < 0:
            a, b = x, nxt
            break
        x = nxt
    while b - a > tol:
        m = (a + b) / 2
        s = _certified_sign(nu, m, prec)
        if s == 0:
            m = m + (b - a) / 16
            s = _certified_sign(nu, m, prec)
            if s == 0:
                raise PrecisionExhausted("sign undecided during bisection")
        if s > 0:
            a = m
        else:
            b = m
    return BesselZeroEnclosure(nu=nu, z=Interval(a, b))


# -- order-interval support for the angle-based eigenvalue bound ----------

def snap_down(nu: Fraction, snap_denom: int) -> Fraction:
    num = (nu.numerator * snap_denom) // nu.denominator
    return Fraction(num, snap_denom)


def snap_up(nu: Fraction, snap_denom: int) -> Fraction:
    num = -((-nu.numerator * snap_denom) // nu.denominator)
    return Fraction(num, snap_denom)


def zero_over_orders(nu_lo, nu_hi, tol=DEFAULT_ZERO_TOL, prec: int = 128,
                     snap_denom: int | None = None) -> Interval:
    """Enclosure of {j_nu : nu in [nu_lo, nu_hi]} via monotonicity in nu.

    With snap_denom set, orders are snapped outward onto a 1/snap_denom grid
    so repeated queries share cached zero enclosures (the bound only widens).
    """
    lo_o = _as_order(nu_lo)
    hi_o = _as_order(nu_hi)
    if snap_denom:
        lo_o = max(snap_down(lo_o, snap_denom), Fraction(0))
        hi_o = snap_up(hi_o, snap_denom)
    lo = first_zero(lo_o, tol, prec).z.lo
    hi = first_zero(hi_o, tol, prec).z.hi
    return Interval(lo, hi, _raw=True)
