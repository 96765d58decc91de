"""Check results and certificates with canonical JSON serialization."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field

from ..arith import NFElem, Rat

PASS, FAIL, INDETERMINATE = "pass", "fail", "indeterminate"


def canon(value, generator: str = "r"):
    """JSON-ready canonical form of a computed or expected value."""
    from ..curves.points import ProjPoint
    from ..poly.parser import format_coeff, print_poly
    from ..poly.ring import MultiPoly

    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return "inf" if value == float("inf") else value
    if isinstance(value, NFElem):
        if value.is_rational():
            return canon(value.c[0])
        return format_coeff(value, generator).strip("()")
    if isinstance(value, ProjPoint):
        return value.to_str(generator)
    if isinstance(value, MultiPoly):
        return print_poly(value, generator)
    if isinstance(value, (list, tuple)):
        return [canon(v, generator) for v in value]
    if isinstance(value, dict):
        return {str(k): canon(v, generator) for k, v in value.items()}
    try:
        q = Rat(value)
    except (TypeError, ValueError):
        return str(value)
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass
class Check:
    name: str
    expected: object
    computed: object
    status: str
    provenance: str = ""
    optional: bool = False
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> dict:
        d = {
            "name": self.name,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
            "provenance": self.provenance,
            "optional": self.optional,
        }
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Certificate:
    scenario: str
    statement: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    budgets: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """Every required check passes; optional checks only fail the run on a wrong answer."""
        for c in self.checks:
            if c.status == PASS:
                continue
            if c.optional and c.status == INDETERMINATE:
                continue
            return False
        return True

    def as_dict(self, timings: bool = True) -> dict:
        d = {
            "scenario": self.scenario,
            "statement": self.statement,
            "checks": [c.as_dict() for c in self.checks],
            "notes": list(self.notes),
            "budgets": self.budgets,
            "pass": self.passed,
        }
        if timings:
            d["timings"] = {k: round(v, 4) for k, v in self.timings.items()}
        return d

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.as_dict(timings), sort_keys=True, indent=2, ensure_ascii=False)


def write_atomic(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".cert-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
