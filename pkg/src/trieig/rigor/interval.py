"""Validated interval arithmetic on MPFR endpoints with outward rounding.

Every operation returns an interval that contains the exact image of its
operands: lower endpoints are rounded toward -inf, upper endpoints toward
+inf.  MPFR guarantees correct rounding for all the functions used here
(including sqrt, k-th roots, atan, tan and gamma), so a directed-rounding
evaluation is a rigorous one-sided bound, not a heuristic.

Endpoints are arbitrary-precision binary floats (gmpy2.mpfr).  The working
precision is taken from a thread-local setting (default 128 bits) and can be
overridden per block with the `precision` context manager.
"""

from __future__ import annotations

import threading
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr, mpq

DEFAULT_PRECISION = 128

_state = threading.local()


class PoleError(ArithmeticError):
    """Division by an interval that contains zero."""


class DomainError(ArithmeticError):
    """Operand outside the domain of the operation (e.g. sqrt of a negative)."""


def get_precision() -> int:
    return getattr(_state, "precision", DEFAULT_PRECISION)


class precision:
    """Context manager setting the working precision (bits) for interval ops."""

    def __init__(self, bits: int):
        if bits < 24:
            raise ValueError("precision below 24 bits is not supported")
        self.bits = bits
        self._saved = None

    def __enter__(self):
        self._saved = get_precision()
        _state.precision = self.bits
        return self

    def __exit__(self, *exc):
        _state.precision = self._saved
        return False


_ctx_cache: dict = {}


def _ctx(prec, rnd):
    key = (prec, rnd)
    ctx = _ctx_cache.get(key)
    if ctx is None:
        ctx = gmpy2.context(precision=prec, round=rnd, trap_divzero=False,
                            trap_overflow=False, trap_underflow=False)
        _ctx_cache[key] = ctx
    return ctx


def _down(prec=None):
    return _ctx(prec or get_precision(), gmpy2.RoundDown)


def _up(prec=None):
    return _ctx(prec or get_precision(), gmpy2.RoundUp)


_ZERO = mpfr(0)


def _to_mpfr_pair(x, prec):
    """Convert a scalar to (rounded-down, rounded-up) mpfr endpoints."""
    if isinstance(x, mpfr):
        return x, x  # dyadic, exact at its own precision
    if isinstance(x, int):
        x = mpq(x)
    elif isinstance(x, float):
        return mpfr(x), mpfr(x)  # binary floats are exact dyadics
    elif isinstance(x, Fraction):
        x = mpq(x.numerator, x.denominator)
    elif isinstance(x, str):
        f = Fraction(x)
        x = mpq(f.numerator, f.denominator)
    elif not isinstance(x, mpq):
        raise TypeError(f"cannot convert {type(x).__name__} to interval endpoint")
    return _down(prec).add(x, _ZERO), _up(prec).add(x, _ZERO)


class Interval:
    """Closed interval [lo, hi] with mpfr endpoints, immutable."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None, _raw=False):
        if _raw:
            object.__setattr__(self, "lo", lo)
            object.__setattr__(self, "hi", hi)
            return
        prec = get_precision()
        lo_d, lo_u = _to_mpfr_pair(lo, prec)
        if hi is None:
            hi_d, hi_u = lo_d, lo_u
        else:
            hi_d, hi_u = _to_mpfr_pair(hi, prec)
        if gmpy2.is_nan(lo_d) or gmpy2.is_nan(hi_u):
            raise ValueError("NaN endpoint")
        if lo_d > hi_u:
            raise ValueError(f"inverted interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo_d)
        object.__setattr__(self, "hi", hi_u)

    def __setattr__(self, *a):
        raise AttributeError("Interval is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def _mk(lo, hi):
        if lo > hi:  # can only arise from a rounding bug; fail loudly
            raise AssertionError("outward rounding produced an inverted interval")
        return Interval(lo, hi, _raw=True)

    @classmethod
    def point(cls, x) -> "Interval":
        return cls(x)

    @classmethod
    def hull(cls, *items) -> "Interval":
        ivs = [it if isinstance(it, Interval) else cls(it) for it in items]
        return cls._mk(min(i.lo for i in ivs), max(i.hi for i in ivs))

    # -- inspection ---------------------------------------------------

    def width(self) -> mpfr:
        return _up().sub(self.hi, self.lo)

    def mid(self) -> float:
        return (float(self.lo) + float(self.hi)) / 2.0

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, Fraction):
            x = mpq(x.numerator, x.denominator)
        return self.lo <= x <= self.hi

    def is_subset(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def straddles_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __eq__(self, other):
        return (isinstance(other, Interval)
                and self.lo == other.lo and self.hi == other.hi)

    def __hash__(self):
        return hash((self.lo, self.hi))

    def to_floats(self) -> tuple:
        """53-bit outward-rounded endpoints; containment survives the cast."""
        return (float(_ctx(53, gmpy2.RoundDown).add(self.lo, _ZERO)),
                float(_ctx(53, gmpy2.RoundUp).add(self.hi, _ZERO)))

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(x):
        return x if isinstance(x, Interval) else Interval(x)

    def __neg__(self):
        return Interval._mk(-self.hi, -self.lo)

    def __add__(self, other):
        o = Interval._coerce(other)
        return Interval._mk(_down().add(self.lo, o.lo), _up().add(self.hi, o.hi))

    __radd__ = __add__

    def __sub__(self, other):
        o = Interval._coerce(other)
        return Interval._mk(_down().sub(self.lo, o.hi), _up().sub(self.hi, o.lo))

    def __rsub__(self, other):
        return Interval._coerce(other) - self

    def __mul__(self, other):
        o = Interval._coerce(other)
        d, u = _down(), _up()
        a, b, c, e = self.lo, self.hi, o.lo, o.hi
        lo = min(d.mul(a, c), d.mul(a, e), d.mul(b, c), d.mul(b, e))
        hi = max(u.mul(a, c), u.mul(a, e), u.mul(b, c), u.mul(b, e))
        return Interval._mk(lo, hi)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Interval._coerce(other)
        if o.lo <= 0 <= o.hi:
            raise PoleError(f"possible pole: divisor {o!r} contains zero")
        d, u = _down(), _up()
        a, b, c, e = self.lo, self.hi, o.lo, o.hi
        lo = min(d.div(a, c), d.div(a, e), d.div(b, c), d.div(b, e))
        hi = max(u.div(a, c), u.div(a, e), u.div(b, c), u.div(b, e))
        return Interval._mk(lo, hi)

    def __rtruediv__(self, other):
        return Interval._coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("interval power requires an integer exponent")
        if n < 0:
            return Interval(1) / self ** (-n)
        if n == 0:
            return Interval(1)
        if n == 1:
            return self
        d, u = _down(), _up()
        if n % 2 == 1 or self.lo >= 0 or self.hi <= 0:
            cands_d = (d.pow(self.lo, n), d.pow(self.hi, n))
            cands_u = (u.pow(self.lo, n), u.pow(self.hi, n))
            return Interval._mk(min(cands_d), max(cands_u))
        # even power of a sign-straddling interval
        hi = max(u.pow(self.lo, n), u.pow(self.hi, n))
        return Interval._mk(mpfr(0), hi)

    def sqrt(self) -> "Interval":
        if self.hi < 0:
            raise DomainError(f"sqrt of negative interval {self!r}")
        lo = self.lo
        if lo < 0:
            # tolerate sub-ulp dips below zero (boundary expressions such as
            # sqrt(1 - 4q^2) touch zero exactly); anything larger is an error
            prec = get_precision()
            slack = _up().mul(max(self.hi, gmpy2.exp2(-prec)), gmpy2.exp2(4 - prec))
            if -lo > slack:
                raise DomainError(f"sqrt of interval {self!r} extending below zero")
            lo = mpfr(0)
        return Interval._mk(_down().sqrt(lo), _up().sqrt(self.hi))

    def cbrt(self) -> "Interval":
        # odd root: defined for negative arguments
        return Interval._mk(_down().rootn(self.lo, 3), _up().rootn(self.hi, 3))

    # -- transcendental (via MPFR correct rounding) --------------------

    def atan(self) -> "Interval":
        return Interval._mk(_down().atan(self.lo), _up().atan(self.hi))

    def tan(self) -> "Interval":
        # restricted to the principal branch; enough for angle windows here
        half_pi = _down().div(_down().const_pi(), 2)
        if self.lo <= -half_pi or self.hi >= half_pi:
            raise DomainError("tan restricted to (-pi/2, pi/2)")
        return Interval._mk(_down().tan(self.lo), _up().tan(self.hi))

    def exp(self) -> "Interval":
        return Interval._mk(_down().exp(self.lo), _up().exp(self.hi))

    def log(self) -> "Interval":
        if self.lo <= 0:
            raise DomainError(f"log of interval {self!r} reaching zero")
        return Interval._mk(_down().log(self.lo), _up().log(self.hi))

    def pow_scalar(self, exponent) -> "Interval":
        """x**e for real scalar e, x >= 0, monotone-in-x evaluation."""
        if self.lo < 0:
            raise DomainError("pow_scalar requires a nonnegative base interval")
        e_lo, e_hi = _to_mpfr_pair(exponent, get_precision())
        if e_lo < 0:
            raise DomainError("pow_scalar requires a nonnegative exponent")
        d, u = _down(), _up()
        lo = min(d.pow(self.lo, e_lo), d.pow(self.lo, e_hi))
        hi = max(u.pow(self.hi, e_lo), u.pow(self.hi, e_hi))
        return Interval._mk(lo, hi)

    # -- lattice ops ----------------------------------------------------

    def intersect(self, other: "Interval") -> "Interval":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("empty intersection")
        return Interval._mk(lo, hi)

    def split(self) -> tuple:
        m = _down().div(_down().add(self.lo, self.hi), 2)
        if not (self.lo < m < self.hi):
            raise ValueError("interval too thin to split")
        return Interval._mk(self.lo, m), Interval._mk(m, self.hi)


def pi_interval(prec=None) -> Interval:
    p = prec or get_precision()
    return Interval._mk(_ctx(p, gmpy2.RoundDown).const_pi(),
                        _ctx(p, gmpy2.RoundUp).const_pi())


def gamma_point(x, prec=None) -> Interval:
    """Enclosure of Gamma at a scalar point x > 0 (MPFR correctly rounded)."""
    p = prec or get_precision()
    x_d, x_u = _to_mpfr_pair(x, p + 8)
    if x_d <= 0:
        raise DomainError("gamma_point requires x > 0")
    vals_d = (_ctx(p, gmpy2.RoundDown).gamma(x_d), _ctx(p, gmpy2.RoundDown).gamma(x_u))
    vals_u = (_ctx(p, gmpy2.RoundUp).gamma(x_d), _ctx(p, gmpy2.RoundUp).gamma(x_u))
    lo, hi = min(vals_d), max(vals_u)
    if x_d < 1.47 and x_u > 1.46:
        # the conversion pair may straddle gamma's minimum; pad one ulp down
        lo = _ctx(p, gmpy2.RoundDown).sub(lo, gmpy2.exp2(-p + 1))
    return Interval._mk(lo, hi)
