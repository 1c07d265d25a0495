"""Independent verification by interval branch-and-bound over each area.

This path shares nothing with the replay's algebra: each area is covered by
adaptive 2-D boxes, and on every box the area's upper bound for the second
eigenvalue (pencil closed form or inscribed rectangle) is compared against
7/3 times its lower bound for the first (diameter/height or smallest-angle),
upper endpoint against lower endpoint.  A box counts as certified when

    sup_box lambda2_upper  <=  (7/3) inf_box lambda1_lower,

boxes certifiably disjoint from the area are pruned, and everything else is
split until the depth cap.

Area IV compares the two bounds in cleared form (both sides scale like 1/q^2,
which diverges as q -> 0; the cleared comparison 3 (1 + (4q^2)^(1/3))^3 <=
7 (1+q)^2 is pointwise equivalent for q > 0 and stays finite).
"""

from __future__ import annotations

import time
from fractions import Fraction

from .. import bessel
from ..geometry import AreaLabel
from ..lambda2 import COEFF_EXPRS, Family, RECTANGLE_EXPR
from ..rigor import (DomainError, Interval, PI, PI2, PoleError, iv_eval,
                     precision)
from . import polys
from .model import BOX_SUBDIVISION, ProofStep

F = Fraction
SEVEN_THIRDS = F(7, 3)

_ZERO_TOL = F(1, 10**8)
_SNAP = 512


def _pencil_over_box(family: Family, env, prec) -> Interval:
    ex = COEFF_EXPRS[family]
    a = iv_eval(ex["A"], env, prec)
    b = iv_eval(ex["B"], env, prec)
    c = iv_eval(ex["C"], env, prec)
    d = iv_eval(ex["D"], env, prec)
    f = iv_eval(ex["F"], env, prec)
    s = a * f + c * d
    disc = s**2 - 4 * d * f * (a * c - b**2)
    return (s + disc.sqrt()) / (2 * d * f)


def _diam_height_over_box(env, prec) -> Interval:
    return iv_eval(PI2 * (1 + 1 / polys.Q)**2, env, prec)


def _angle_over_box(env, prec) -> Interval:
    theta = (env["q"] / env["p"]).atan()
    nu = iv_eval(PI, {}, prec) / theta
    j = bessel.zero_over_orders(nu.lo, nu.hi, _ZERO_TOL, prec,
                                snap_denom=_SNAP)
    return theta * j * j / env["q"]


def _outside_disc(env, prec) -> bool:
    resid = (env["p"] - F(1, 2))**2 + env["q"]**2 - F(1, 4)
    return resid.lo > 0


def _below_segment(env, prec) -> bool:
    seg = (85 * env["p"] - 69) / Interval(50)
    return env["q"].hi < seg.lo


def _above_segment(env, prec) -> bool:
    seg = (85 * env["p"] - 69) / Interval(50)
    return env["q"].lo > seg.hi


def _check_ratio(upper: Interval, lower: Interval) -> bool:
    return upper.hi <= (SEVEN_THIRDS * lower).lo


def _area1_check(env, prec) -> bool:
    return _check_ratio(_pencil_over_box(Family.T45, env, prec),
                        _diam_height_over_box(env, prec))


def _area2_check(env, prec) -> bool:
    return _check_ratio(_pencil_over_box(Family.T30, env, prec),
                        _diam_height_over_box(env, prec))


def _area3_check(env, prec) -> bool:
    return _check_ratio(iv_eval(RECTANGLE_EXPR, env, prec),
                        _angle_over_box(env, prec))


def _area4_check(env, prec) -> bool:
    return iv_eval(polys.F_AREA4, env, prec).hi < 0


_AREAS = {
    "I": {
        "box": {"p": (F(1, 2), F(13, 20)), "q": (F(39, 250), F(1, 2))},
        "disjoint": (_outside_disc,),
        "check": _area1_check,
        "pairing": "45-family pencil vs diameter/height",
    },
    "II": {
        "box": {"p": (F(13, 20), F(19, 20)), "q": (F(39, 250), F(1, 2))},
        "disjoint": (_outside_disc, _below_segment),
        "check": _area2_check,
        "pairing": "30-family pencil vs diameter/height",
    },
    "III": {
        "box": {"p": (F(9, 10), F(19, 20)), "q": (F(39, 250), F(23, 100))},
        "disjoint": (_outside_disc, _above_segment),
        "check": _area3_check,
        "pairing": "inscribed rectangle vs smallest-angle Bessel",
    },
    "IV": {
        "box": {"q": (F(0), F(39, 250))},
        "disjoint": (),
        "check": _area4_check,
        "pairing": "inscribed rectangle vs diameter/height (cleared form)",
    },
}


def certify_subdivision(area, max_depth: int = 30, prec: int = 128) -> ProofStep:
    """Branch-and-bound proof of lambda2_upper <= (7/3) lambda1_lower on one area."""
    label = area.value if isinstance(area, AreaLabel) else str(area)
    spec = _AREAS[label]
    t0 = time.perf_counter()
    with precision(prec):
        box0 = {k: Interval(lo, hi) for k, (lo, hi) in spec["box"].items()}
        names = sorted(box0)
        widths = {k: max(float(box0[k].width()), 1e-30) for k in names}
        stack = [(box0, 0)]
        boxes = certified = pruned = 0
        deepest = 0
        failed = None
        while stack:
            env, depth = stack.pop()
            boxes += 1
            deepest = max(deepest, depth)
            if any(d(env, prec) for d in spec["disjoint"]):
                pruned += 1
                continue
            ok = False
            try:
                ok = spec["check"](env, prec)
            except (DomainError, PoleError, ValueError):
                ok = False
            if ok:
                certified += 1
                continue
            if depth >= max_depth:
                failed = {k: v.to_floats() for k, v in env.items()}
                break
            key = max(names, key=lambda k: float(env[k].width()) / widths[k])
            lo_part, hi_part = env[key].split()
            for part in (lo_part, hi_part):
                child = dict(env)
                child[key] = part
                stack.append((child, depth + 1))
    step = ProofStep(
        kind=BOX_SUBDIVISION,
        claim=f"Area {label}: {spec['pairing']}; every box of an adaptive "
              "subdivision satisfies the 7/3 ratio bound with outward "
              "endpoints",
        detail={"boxes": boxes, "certified": certified, "pruned": pruned,
                "max_depth": deepest, "depth_cap": max_depth,
                "wall_ms": round((time.perf_counter() - t0) * 1000.0, 3),
                **({"failed_box": failed} if failed else {})},
    )
    return step.finalize(failed is None)
