"""Exact polynomial normal form for symbolic identity checks.

Expressions are flattened into Laurent polynomials over the variables with
exact Fraction coefficients, in a ring extended by algebraic generators:

    pi      : transcendental, no reduction
    c       : 2^(1/3), with c^3 -> 2
    r3/r91/r1729 : square roots of 3, 91, 1729, with gen^2 -> value

Callers may declare additional generators with a polynomial reduction (e.g.
w with w^2 -> p - p^2 to reason on the circular arc q = sqrt(p(1-p))), and may
map Sqrt/Cbrt sub-expressions onto generators.  Two expressions are identical
iff their normal forms are equal; this is the engine behind every
"verified by symbolic expansion" step of the proof replay.

Only what the replay needs is supported; anything else raises
NormalizationError rather than silently approximating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import expr as ex
from .interval import Interval

_CONST_TO_GEN = {
    "pi": (("pi", 1),),
    "pi2": (("pi", 2),),
    "pi4": (("pi", 4),),
    "cbrt2": (("c", 1),),
    "cbrt4": (("c", 2),),
    "sqrt3": (("r3", 1),),
    "sqrt91": (("r91", 1),),
    "sqrt1729": (("r1729", 1),),
}

_GEN_TO_CONST = {"pi": "pi", "c": "cbrt2", "r3": "sqrt3", "r91": "sqrt91",
                 "r1729": "sqrt1729"}


class NormalizationError(ValueError):
    pass


@dataclass(frozen=True)
class GenDef:
    """gen**cap reduces to `replacement` (a Poly over variables, or None)."""
    cap: int
    replacement: "Poly"


class Poly:
    """Laurent polynomial: {monomial: Fraction}, monomial = sorted (sym, exp)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms or {})

    @classmethod
    def const(cls, value) -> "Poly":
        value = Fraction(value)
        return cls({(): value} if value else {})

    @classmethod
    def sym(cls, name: str, exp: int = 1) -> "Poly":
        return cls({((name, exp),): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Poly({self.terms!r})"

    def _add_term(self, mono, coeff):
        new = self.terms.get(mono, Fraction(0)) + coeff
        if new:
            self.terms[mono] = new
        else:
            self.terms.pop(mono, None)

    def __add__(self, other):
        out = Poly(self.terms)
        for m, c in other.terms.items():
            out._add_term(m, c)
        return out

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> "Poly":
        k = Fraction(k)
        if not k:
            return Poly()
        return Poly({m: c * k for m, c in self.terms.items()})

    def mul(self, other: "Poly", gens: dict) -> "Poly":
        out = Poly()
        for m1, c1 in self.terms.items():
            d1 = dict(m1)
            for m2, c2 in other.terms.items():
                merged = dict(d1)
                for s, e in m2:
                    merged[s] = merged.get(s, 0) + e
                for mono, coeff in _reduce(merged, c1 * c2, gens):
                    out._add_term(mono, coeff)
        return out

    def pow(self, n: int, gens: dict) -> "Poly":
        if n < 0:
            inv = self.invert_monomial(gens)
            return inv.pow(-n, gens)
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out.mul(base, gens)
            base_next = base.mul(base, gens) if n > 1 else base
            base = base_next
            n >>= 1
        return out

    def invert_monomial(self, gens: dict | None = None) -> "Poly":
        if len(self.terms) != 1:
            raise NormalizationError("division only by a single-term monomial")
        (mono, coeff), = self.terms.items()
        inv = {s: -e for s, e in mono}
        out = Poly()
        for m, c in _reduce(inv, Fraction(1) / coeff, gens or builtin_gens()):
            out._add_term(m, c)
        return out

    # -- queries --------------------------------------------------------

    def degree(self, var: str) -> int:
        deg = 0
        for mono in self.terms:
            for s, e in mono:
                if s == var:
                    deg = max(deg, e)
        return deg

    def coeff_of(self, var: str, k: int) -> "Poly":
        """Coefficient of var**k, as a Poly in the remaining symbols."""
        out = Poly()
        for mono, c in self.terms.items():
            d = dict(mono)
            if d.pop(var, 0) == k:
                out._add_term(tuple(sorted(d.items())), c)
        return out

    def diff(self, var: str) -> "Poly":
        """d/d var; only valid when no custom generator depends on var."""
        out = Poly()
        for mono, c in self.terms.items():
            d = dict(mono)
            e = d.get(var, 0)
            if not e:
                continue
            d[var] = e - 1
            if d[var] == 0:
                del d[var]
            out._add_term(tuple(sorted(d.items())), c * e)
        return out

    def as_expr(self) -> ex.Expr:
        """Back-conversion for interval evaluation (generators -> constants)."""
        if not self.terms:
            return ex.ZERO
        terms = []
        for mono, c in sorted(self.terms.items()):
            factors = [ex.Lit(c)]
            for sym, e in mono:
                base = (ex.Const(_GEN_TO_CONST[sym]) if sym in _GEN_TO_CONST
                        else ex.Var(sym))
                factors.append(ex.Pow(base, e) if e != 1 else base)
            terms.append(ex.Mul(tuple(factors)) if len(factors) > 1 else factors[0])
        return ex.Add(tuple(terms)) if len(terms) > 1 else terms[0]


def builtin_gens() -> dict:
    return {
        "pi": None,
        "c": GenDef(3, Poly.const(2)),
        "r3": GenDef(2, Poly.const(3)),
        "r91": GenDef(2, Poly.const(91)),
        "r1729": GenDef(2, Poly.const(1729)),
    }


def _reduce(merged: dict, coeff: Fraction, gens: dict):
    """Reduce generator powers in a monomial; yields (monomial, coeff) pairs."""
    work = [(merged, coeff)]
    done = []
    while work:
        mono, c = work.pop()
        for sym, e in list(mono.items()):
            if e == 0:
                del mono[sym]
                continue
            gd = gens.get(sym)
            if gd is None or not isinstance(gd, GenDef):
                if sym in gens and e < 0:
                    raise NormalizationError(f"negative power of generator {sym}")
                continue
            if e < 0:
                # invertible only for constant rational reductions (e.g. 1/c = c^2/2)
                rep = gd.replacement.terms
                if set(rep) - {()}:
                    raise NormalizationError(f"negative power of generator {sym}")
                ratio = rep.get((), None)
                if not ratio:
                    raise NormalizationError(f"negative power of generator {sym}")
                t = (-e + gd.cap - 1) // gd.cap
                nm = dict(mono)
                nm[sym] = e + t * gd.cap
                if nm[sym] == 0:
                    del nm[sym]
                work.append((nm, c / ratio**t))
                break
            if e >= gd.cap:
                base = dict(mono)
                base[sym] = e - gd.cap
                if base[sym] == 0:
                    del base[sym]
                for rm, rc in gd.replacement.terms.items():
                    nm = dict(base)
                    for s2, e2 in rm:
                        nm[s2] = nm.get(s2, 0) + e2
                    work.append((nm, c * rc))
                break
        else:
            done.append((tuple(sorted((s, e) for s, e in mono.items() if e)), c))
    return done


def _sqrt_fraction(value: Fraction):
    """sqrt(value) as (rational, gen) with gen in {None, r3, r91, r1729}."""
    if value < 0:
        raise NormalizationError("sqrt of a negative literal")
    for k, gen in ((1, None), (3, "r3"), (91, "r91"), (1729, "r1729")):
        v = value / k
        num, den = v.numerator, v.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            return Fraction(rn, rd), gen
    raise NormalizationError(f"sqrt({value}) is not representable")


def _cbrt_fraction(value: Fraction):
    """cbrt(value) as (rational, c-power)."""
    sign = -1 if value < 0 else 1
    mag = abs(value)
    for k, cpow in ((1, 0), (2, 1), (4, 2)):
        v = mag / k
        num, den = v.numerator, v.denominator
        rn = round(num ** (1 / 3)) if num < 2**52 else _icbrt(num)
        rd = round(den ** (1 / 3)) if den < 2**52 else _icbrt(den)
        if rn**3 == num and rd**3 == den:
            return Fraction(sign * rn, rd), cpow
    raise NormalizationError(f"cbrt({value}) is not representable")


def _icbrt(n: int) -> int:
    x = int(round(n ** (1 / 3)))
    while x**3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def normalize(expr: ex.Expr, gens: dict | None = None,
              sqrt_map: dict | None = None, cbrt_map: dict | None = None) -> Poly:
    """Normal form of `expr`.

    gens: extra generators {name: GenDef}; sqrt_map / cbrt_map: {Poly: gen name}
    matching radical arguments onto generators.
    """
    all_gens = builtin_gens()
    if gens:
        all_gens.update(gens)
    sqrt_map = sqrt_map or {}
    cbrt_map = cbrt_map or {}
    return _norm(expr, all_gens, sqrt_map, cbrt_map, {})


def _norm(e: ex.Expr, gens, sqrt_map, cbrt_map, cache) -> Poly:
    key = id(e)
    if key in cache:
        return cache[key]
    if isinstance(e, ex.Lit):
        p = Poly.const(e.value)
    elif isinstance(e, ex.Const):
        mono = _CONST_TO_GEN[e.name]
        p = Poly({tuple(mono): Fraction(1)})
    elif isinstance(e, ex.Var):
        p = Poly.sym(e.name)
    elif isinstance(e, ex.Add):
        p = Poly()
        for t in e.terms:
            p = p + _norm(t, gens, sqrt_map, cbrt_map, cache)
    elif isinstance(e, ex.Mul):
        p = Poly.const(1)
        for f in e.factors:
            p = p.mul(_norm(f, gens, sqrt_map, cbrt_map, cache), gens)
    elif isinstance(e, ex.Div):
        den = _norm(e.den, gens, sqrt_map, cbrt_map, cache)
        p = _norm(e.num, gens, sqrt_map, cbrt_map, cache).mul(
            den.invert_monomial(gens), gens)
    elif isinstance(e, ex.Pow):
        p = _norm(e.base, gens, sqrt_map, cbrt_map, cache).pow(e.exponent, gens)
    elif isinstance(e, ex.Sqrt):
        p = _radical(e.arg, 2, gens, sqrt_map, cbrt_map, cache)
    elif isinstance(e, ex.Cbrt):
        p = _radical(e.arg, 3, gens, sqrt_map, cbrt_map, cache)
    else:
        raise NormalizationError(f"unsupported node {e!r}")
    cache[key] = p
    return p


def _radical(arg: ex.Expr, k: int, gens, sqrt_map, cbrt_map, cache) -> Poly:
    na = _norm(arg, gens, sqrt_map, cbrt_map, cache)
    mapping = sqrt_map if k == 2 else cbrt_map
    for poly, gen_name in mapping.items():
        if na == poly:
            return Poly.sym(gen_name)
    if len(na.terms) != 1:
        raise NormalizationError(f"{k}-th root of a non-monomial")
    (mono, coeff), = na.terms.items()
    half = []
    for sym, e in mono:
        if sym in gens and isinstance(gens.get(sym), GenDef):
            raise NormalizationError("root of a generator monomial")
        if e % k:
            raise NormalizationError(f"{k}-th root of odd power {sym}^{e}")
        half.append((sym, e // k))
    if k == 2:
        rat, gen = _sqrt_fraction(coeff)
        extra = ((gen, 1),) if gen else ()
    else:
        rat, cpow = _cbrt_fraction(coeff)
        extra = (("c", cpow),) if cpow else ()
    mono_out = tuple(sorted(tuple(half) + tuple(extra)))
    return Poly({mono_out: rat})


def poly_equal(a: ex.Expr, b: ex.Expr, **kw) -> bool:
    return normalize(a - b, **kw).is_zero()


def poly_eval(p: Poly, env: dict, prec=None) -> Interval:
    from .expr import iv_eval
    return iv_eval(p.as_expr(), env, prec)
