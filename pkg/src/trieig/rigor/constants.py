"""Shared enclosures of the irrational constants used across the proof replay."""

from __future__ import annotations

import threading

from .interval import Interval, pi_interval, precision

_GUARD_BITS = 16

_lock = threading.Lock()
_cache: dict = {}


class ConstantTable:
    """Enclosures of pi, pi^2, pi^4, sqrt3, sqrt91, sqrt1729, 2^(1/3), 2^(2/3).

    Computed with `_GUARD_BITS` extra working bits so each enclosure width is
    at most 2**(1 - precision_bits).
    """

    __slots__ = ("prec", "pi", "pi2", "pi4", "sqrt3", "sqrt91", "sqrt1729",
                 "cbrt2", "cbrt4")

    def __init__(self, prec: int):
        self.prec = prec
        with precision(prec + _GUARD_BITS):
            self.pi = pi_interval()
            self.pi2 = self.pi * self.pi
            self.pi4 = self.pi2 * self.pi2
            self.sqrt3 = Interval(3).sqrt()
            self.sqrt91 = Interval(91).sqrt()
            self.sqrt1729 = Interval(1729).sqrt()
            self.cbrt2 = Interval(2).cbrt()
            self.cbrt4 = Interval(4).cbrt()

    def by_name(self, name: str) -> Interval:
        try:
            return getattr(self, name)
        except AttributeError:
            raise KeyError(f"unknown constant {name!r}") from None


def constants(prec: int) -> ConstantTable:
    with _lock:
        table = _cache.get(prec)
        if table is None:
            table = ConstantTable(prec)
            _cache[prec] = table
        return table


CONSTANT_NAMES = ("pi", "pi2", "pi4", "sqrt3", "sqrt91", "sqrt1729",
                  "cbrt2", "cbrt4")
