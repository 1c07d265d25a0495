"""Expression trees over exact rational literals, named constants and variables.

The node set is deliberately small: +, -, *, /, integer powers, square root
and cube root over literals, the named constants of `ConstantTable` and free
variables.  Trees are immutable and hashable; evaluation over a box of
`Interval`s is outward rounded, and differentiation handles the radical nodes
(needed for the monotonicity arguments in the proof replay).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constants import CONSTANT_NAMES, constants
from .interval import DomainError, Interval, get_precision, precision


class Expr:
    __slots__ = ()

    # construction sugar ------------------------------------------------
    def __add__(self, other):
        return Add((self, as_expr(other)))

    def __radd__(self, other):
        return Add((as_expr(other), self))

    def __sub__(self, other):
        return Add((self, Mul((MINUS_ONE, as_expr(other)))))

    def __rsub__(self, other):
        return Add((as_expr(other), Mul((MINUS_ONE, self))))

    def __mul__(self, other):
        return Mul((self, as_expr(other)))

    def __rmul__(self, other):
        return Mul((as_expr(other), self))

    def __truediv__(self, other):
        return Div(self, as_expr(other))

    def __rtruediv__(self, other):
        return Div(as_expr(other), self)

    def __pow__(self, n: int):
        return Pow(self, n)

    def __neg__(self):
        return Mul((MINUS_ONE, self))


@dataclass(frozen=True, slots=True)
class Lit(Expr):
    value: Fraction

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True, slots=True)
class Const(Expr):
    name: str

    def __post_init__(self):
        if self.name not in CONSTANT_NAMES:
            raise ValueError(f"unknown constant {self.name!r}")


@dataclass(frozen=True, slots=True)
class Var(Expr):
    name: str


@dataclass(frozen=True, slots=True)
class Add(Expr):
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(as_expr(t) for t in self.terms))


@dataclass(frozen=True, slots=True)
class Mul(Expr):
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(as_expr(f) for f in self.factors))


@dataclass(frozen=True, slots=True)
class Div(Expr):
    num: Expr
    den: Expr


@dataclass(frozen=True, slots=True)
class Pow(Expr):
    base: Expr
    exponent: int

    def __post_init__(self):
        if not isinstance(self.exponent, int):
            raise TypeError("Pow exponent must be an int")


@dataclass(frozen=True, slots=True)
class Sqrt(Expr):
    arg: Expr


@dataclass(frozen=True, slots=True)
class Cbrt(Expr):
    arg: Expr


ZERO = Lit(Fraction(0))
ONE = Lit(Fraction(1))
MINUS_ONE = Lit(Fraction(-1))

PI = Const("pi")
PI2 = Const("pi2")
PI4 = Const("pi4")


def as_expr(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, (int, Fraction)):
        return Lit(Fraction(x))
    if isinstance(x, str):
        return Lit(Fraction(x))
    raise TypeError(f"cannot interpret {x!r} as an expression "
                    "(floats are rejected: pass exact rationals)")


def free_vars(expr: Expr) -> frozenset:
    out = set()
    stack = [expr]
    while stack:
        e = stack.pop()
        if isinstance(e, Var):
            out.add(e.name)
        elif isinstance(e, Add):
            stack.extend(e.terms)
        elif isinstance(e, Mul):
            stack.extend(e.factors)
        elif isinstance(e, Div):
            stack.append(e.num)
            stack.append(e.den)
        elif isinstance(e, (Pow, Sqrt, Cbrt)):
            stack.append(e.base if isinstance(e, Pow) else e.arg)
    return frozenset(out)


def iv_eval(expr: Expr, env=None, prec=None) -> Interval:
    """Outward-rounded enclosure of `expr` over the box `env` (var -> Interval).

    Raises PoleError / DomainError as the underlying interval ops do, and
    KeyError for an unassigned variable.
    """
    env = env or {}
    prec = prec or get_precision()
    table = constants(prec)
    cache: dict = {}
    with precision(prec):
        return _eval(expr, env, table, cache)


def _eval(e: Expr, env, table, cache) -> Interval:
    key = id(e)
    got = cache.get(key)
    if got is not None:
        return got
    if isinstance(e, Lit):
        v = Interval(e.value)
    elif isinstance(e, Const):
        v = table.by_name(e.name)
    elif isinstance(e, Var):
        v = env[e.name]
        if not isinstance(v, Interval):
            v = Interval(v)
    elif isinstance(e, Add):
        v = _eval(e.terms[0], env, table, cache)
        for t in e.terms[1:]:
            v = v + _eval(t, env, table, cache)
    elif isinstance(e, Mul):
        v = _eval(e.factors[0], env, table, cache)
        for f in e.factors[1:]:
            v = v * _eval(f, env, table, cache)
    elif isinstance(e, Div):
        v = _eval(e.num, env, table, cache) / _eval(e.den, env, table, cache)
    elif isinstance(e, Pow):
        v = _eval(e.base, env, table, cache) ** e.exponent
    elif isinstance(e, Sqrt):
        v = _eval(e.arg, env, table, cache).sqrt()
    elif isinstance(e, Cbrt):
        v = _eval(e.arg, env, table, cache).cbrt()
    else:
        raise TypeError(f"unknown node {e!r}")
    cache[key] = v
    return v


def subs(expr: Expr, mapping: dict) -> Expr:
    """Substitute variables by expressions; mapping is var name -> Expr."""
    if isinstance(expr, Var):
        return mapping.get(expr.name, expr)
    if isinstance(expr, (Lit, Const)):
        return expr
    if isinstance(expr, Add):
        return Add(tuple(subs(t, mapping) for t in expr.terms))
    if isinstance(expr, Mul):
        return Mul(tuple(subs(f, mapping) for f in expr.factors))
    if isinstance(expr, Div):
        return Div(subs(expr.num, mapping), subs(expr.den, mapping))
    if isinstance(expr, Pow):
        return Pow(subs(expr.base, mapping), expr.exponent)
    if isinstance(expr, Sqrt):
        return Sqrt(subs(expr.arg, mapping))
    if isinstance(expr, Cbrt):
        return Cbrt(subs(expr.arg, mapping))
    raise TypeError(f"unknown node {expr!r}")


def diff(expr: Expr, var: str) -> Expr:
    """Derivative with respect to `var`; supports the full node set."""
    if isinstance(expr, (Lit, Const)):
        return ZERO
    if isinstance(expr, Var):
        return ONE if expr.name == var else ZERO
    if isinstance(expr, Add):
        return Add(tuple(diff(t, var) for t in expr.terms))
    if isinstance(expr, Mul):
        fs = expr.factors
        parts = []
        for i, f in enumerate(fs):
            df = diff(f, var)
            if df == ZERO:
                continue
            parts.append(Mul(fs[:i] + (df,) + fs[i + 1:]))
        if not parts:
            return ZERO
        return Add(tuple(parts)) if len(parts) > 1 else parts[0]
    if isinstance(expr, Div):
        u, v = expr.num, expr.den
        return Div(diff(u, var) * v - u * diff(v, var), Pow(v, 2))
    if isinstance(expr, Pow):
        n = expr.exponent
        if n == 0:
            return ZERO
        return Lit(Fraction(n)) * Pow(expr.base, n - 1) * diff(expr.base, var)
    if isinstance(expr, Sqrt):
        return Div(diff(expr.arg, var), Lit(Fraction(2)) * expr)
    if isinstance(expr, Cbrt):
        return Div(diff(expr.arg, var), Lit(Fraction(3)) * Pow(expr, 2))
    raise TypeError(f"unknown node {expr!r}")
