"""Certified sign determination of an expression over a box by adaptive bisection."""

from __future__ import annotations

import enum

from .expr import iv_eval
from .interval import DomainError, Interval, PoleError, get_precision


class Sign(enum.Enum):
    NEGATIVE = "NEGATIVE"
    POSITIVE = "POSITIVE"
    UNKNOWN = "UNKNOWN"


def sign_over(expr, box: dict, max_depth: int = 40, prec=None) -> Sign:
    """Prove expr < 0 or expr > 0 on the whole box, or give up.

    The box maps variable names to Intervals.  A NEGATIVE/POSITIVE verdict is
    a certificate: the interval evaluation (after bisection) bounds the
    expression away from zero on every sub-box.  UNKNOWN is returned when the
    depth budget is exhausted or the expression provably changes sign.
    """
    prec = prec or get_precision()
    names = sorted(box)
    root = [box[n] for n in names]
    widths = [max(float(iv.width()), 1e-300) for iv in root]

    neg_possible = True
    pos_possible = True
    stack = [(root, 0)]
    while stack:
        cur, depth = stack.pop()
        try:
            val = iv_eval(expr, dict(zip(names, cur)), prec)
        except (PoleError, DomainError):
            val = None
        if val is not None:
            if val.hi < 0:
                pos_possible = False
                if not neg_possible:
                    return Sign.UNKNOWN
                continue
            if val.lo > 0:
                neg_possible = False
                if not pos_possible:
                    return Sign.UNKNOWN
                continue
        if depth >= max_depth:
            return Sign.UNKNOWN
        i = max(range(len(cur)),
                key=lambda k: float(cur[k].width()) / widths[k])
        try:
            left, right = cur[i].split()
        except ValueError:
            return Sign.UNKNOWN
        for part in (left, right):
            nxt = list(cur)
            nxt[i] = part
            stack.append((nxt, depth + 1))
    if neg_possible and not pos_possible:
        return Sign.NEGATIVE
    if pos_possible and not neg_possible:
        return Sign.POSITIVE
    # every leaf was bounded away from zero on both sides: empty box edge case
    return Sign.UNKNOWN


def prove_negative(expr, box: dict, max_depth: int = 40, prec=None) -> bool:
    return sign_over(expr, box, max_depth, prec) is Sign.NEGATIVE


def prove_positive(expr, box: dict, max_depth: int = 40, prec=None) -> bool:
    return sign_over(expr, box, max_depth, prec) is Sign.POSITIVE
