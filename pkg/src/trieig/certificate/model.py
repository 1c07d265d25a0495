"""Data model of the machine-checkable certificate: steps, anchors, report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..rigor import Interval

PASS = "PASS"
FAIL = "FAIL"
ASSUMED = "ASSUMED"

# step kinds
ALPHA_QUADRATIC_NONPOSITIVE = "ALPHA_QUADRATIC_NONPOSITIVE"
ALL_ALPHA_POSITIVE = "ALL_ALPHA_POSITIVE"
PARTIAL_CONVEXITY_REDUCTION = "PARTIAL_CONVEXITY_REDUCTION"
UNIVARIATE_SIGN = "UNIVARIATE_SIGN"
MONOTONE_COMPARATOR_COVERING = "MONOTONE_COMPARATOR_COVERING"
SUBSTITUTION_MONOTONE = "SUBSTITUTION_MONOTONE"
ASSUMED_LEMMA = "ASSUMED_LEMMA"
BOX_SUBDIVISION = "BOX_SUBDIVISION"

# strategies for UNIVARIATE_SIGN
ENDPOINT_MONOTONE_DERIVATIVE = "ENDPOINT_MONOTONE_DERIVATIVE"
CONVEXITY_ENDPOINTS = "CONVEXITY_ENDPOINTS"
BISECTION = "BISECTION"


def _ulp_of_printed(printed: str) -> Fraction:
    """Unit in the last printed decimal digit, e.g. '-4.12237e8' -> 1e3."""
    s = printed.lower().replace("-", "").replace("+", "")
    if "e" in s:
        mant, exp = s.split("e")
        e = int(exp)
    else:
        mant, e = s, 0
    digits_after_dot = len(mant.split(".")[1]) if "." in mant else 0
    return Fraction(10) ** (e - digits_after_dot)


@dataclass(frozen=True)
class Anchor:
    """A computed enclosure compared against a printed reference value.

    `tol` defaults to five units of the last printed digit (printed decimals
    are rounded).  `required=False` marks anchors that document a printed
    value without gating the step verdict (used for the two reference values
    whose printed decimal contradicts the printed formula; see `note`).
    """

    name: str
    enclosure: Interval
    paper_value: str | None = None
    tol: Fraction | None = None
    required: bool = True
    note: str = ""

    @property
    def matched(self) -> bool | None:
        if self.paper_value is None:
            return None
        v = Fraction(self.paper_value)
        tol = self.tol if self.tol is not None else 5 * _ulp_of_printed(self.paper_value)
        lo = Fraction(*float_ratio(self.enclosure.lo))
        hi = Fraction(*float_ratio(self.enclosure.hi))
        dist = max(Fraction(0), lo - v, v - hi)
        return dist <= tol

    def to_dict(self) -> dict:
        lo, hi = self.enclosure.to_floats()
        d = {"name": self.name, "enclosure_lo": lo, "enclosure_hi": hi,
             "paper_value": (float(Fraction(self.paper_value))
                             if self.paper_value is not None else None)}
        if self.paper_value is not None:
            d["matched"] = self.matched
        if self.note:
            d["note"] = self.note
        return d


def float_ratio(x):
    num, den = x.as_integer_ratio()
    return int(num), int(den)


@dataclass
class ProofStep:
    kind: str
    claim: str
    verdict: str = PASS
    strategy: str | None = None
    anchors: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict in (PASS, ASSUMED)

    def finalize(self, claim_ok: bool) -> "ProofStep":
        """Set the verdict from the certified claim and the required anchors."""
        anchors_ok = all(a.matched is not False for a in self.anchors if a.required)
        self.verdict = PASS if (claim_ok and anchors_ok) else FAIL
        return self

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "claim": self.claim, "verdict": self.verdict,
             "anchors": [a.to_dict() for a in self.anchors]}
        if self.strategy:
            d["strategy"] = self.strategy
        if self.detail:
            d["detail"] = _jsonable(self.detail)
        return d


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Interval):
        lo, hi = obj.to_floats()
        return [lo, hi]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)


@dataclass
class AreaResult:
    label: str
    steps: list

    @property
    def verdict(self) -> str:
        return PASS if all(s.passed for s in self.steps) else FAIL

    def to_dict(self) -> dict:
        return {"label": self.label,
                "steps": [s.to_dict() for s in self.steps],
                "verdict": self.verdict}


ASSUMED_LEMMAS = [
    "Acute triangles satisfy the ratio bound by Siudeja's proof of the acute "
    "case (assumed; acute inputs are only cross-checked numerically here).",
    "lambda1 >= pi^2 (1/d + 1/h)^2 for triangles (Siudeja-Freitas diameter/"
    "height bound, assumed from the cited literature).",
    "lambda1 >= theta j_{pi/theta}^2 / (2A) for triangles (smallest-angle "
    "bound, assumed from the cited literature).",
    "Elbert: d j_t / d t > 1 for t > 0 (applicable since j_0 = 2.40.. > 1/4).",
    "Elbert: t -> j_t is concave.",
    "Classical Bessel zero facts: j_nu is strictly increasing in nu, "
    "j_nu > max(nu, 1), and J_nu > 0 on (0, j_nu).",
]


@dataclass
class CertificateReport:
    mode: str
    precision_bits: int
    areas: list
    assumed_lemmas: list = field(default_factory=lambda: list(ASSUMED_LEMMAS))
    wall_time_ms: float = 0.0

    @property
    def overall_verdict(self) -> str:
        return PASS if all(a.verdict == PASS for a in self.areas) else FAIL

    def area(self, label: str) -> AreaResult:
        for a in self.areas:
            if a.label == label:
                return a
        raise KeyError(label)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "precision_bits": self.precision_bits,
            "areas": [a.to_dict() for a in self.areas],
            "assumed_lemmas": list(self.assumed_lemmas),
            "overall_verdict": self.overall_verdict,
            "wall_time_ms": self.wall_time_ms,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)

    def anchor(self, name: str) -> Anchor:
        """Look up an anchor by name across all steps (unique names assumed)."""
        for area in self.areas:
            for step in area.steps:
                for a in step.anchors:
                    if a.name == name:
                        return a
        raise KeyError(name)
