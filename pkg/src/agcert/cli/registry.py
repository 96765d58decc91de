"""Scenario files, the run context handed to each scenario, and the registry."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable

from ..arith import NumberField, QQ, parse_field
from ..ideals import Budget, BudgetExceeded
from ..poly.parser import PolySyntaxError, parse_element, parse_poly
from ..poly.ring import make_ring
from .certificate import FAIL, INDETERMINATE, PASS, Certificate, Check, canon

PROVENANCE = ("reference", "trivial", "derived")


class ScenarioError(ValueError):
    """Malformed scenario data or unknown id (exit code 2)."""


@dataclass
class Expected:
    name: str
    value: object
    provenance: str
    optional: bool = False


@dataclass
class Scenario:
    id: str
    statement: str
    field_spec: str
    vars: list
    inputs: dict
    expected: dict
    optional_note: str = ""
    budget: dict = field(default_factory=dict)

    @property
    def field(self) -> NumberField:
        return parse_field(self.field_spec)

    def ring(self, names=None, field=None):
        return make_ring(names or self.vars, field or self.field)

    def poly(self, key: str, ring=None):
        ring = ring or self.ring()
        return parse_poly(self.inputs[key], ring)

    def element(self, text: str, field=None):
        return parse_element(str(text), field or self.field)


def scenario_from_dict(d: dict) -> Scenario:
    try:
        sid = d["id"]
        exp = {}
        for e in d["expected"]:
            prov = e.get("provenance", "")
            if prov not in PROVENANCE:
                raise ScenarioError(f"{sid}: expected value {e.get('name')!r} lacks a provenance tag")
            if e["name"] in exp:
                raise ScenarioError(f"{sid}: duplicate expected value {e['name']!r}")
            exp[e["name"]] = Expected(e["name"], e["value"], prov, bool(e.get("optional", False)))
        return Scenario(
            id=sid,
            statement=d.get("statement", ""),
            field_spec=d.get("field", "Q"),
            vars=list(d.get("vars", [])),
            inputs=dict(d.get("inputs", {})),
            expected=exp,
            optional_note=d.get("optional_note", ""),
            budget=dict(d.get("budget", {})),
        )
    except KeyError as exc:
        raise ScenarioError(f"scenario file misses field {exc}") from None


def load_builtin(sid: str) -> Scenario:
    try:
        text = resources.files("agcert.cli").joinpath("data", f"{sid}.json").read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ScenarioError(f"unknown scenario {sid!r}") from None
    return scenario_from_dict(json.loads(text))


def load_file(path: str) -> Scenario:
    try:
        with open(path, encoding="utf-8") as fh:
            return scenario_from_dict(json.load(fh))
    except (OSError, json.JSONDecodeError) as exc:
        raise ScenarioError(str(exc)) from None


class Run:
    """Collects checks for one scenario against its expected values."""

    def __init__(self, scenario: Scenario, budget: Budget, optional: bool = False):
        self.scenario = scenario
        self.budget = budget
        self.optional_enabled = optional
        self.cert = Certificate(scenario.id, scenario.statement, budgets=budget.as_dict())
        self._used: set = set()
        self._t0 = time.perf_counter()
        self.generator = "r"

    def expected(self, name: str):
        return self.scenario.expected[name].value

    def _record(self, name, computed, status, note=""):
        if name in self._used:
            raise ScenarioError(f"expected value {name!r} checked twice")
        self._used.add(name)
        e = self.scenario.expected[name]
        self.cert.checks.append(
            Check(name, e.value, computed, status, e.provenance, e.optional, note)
        )

    def check(self, name: str, computed, compare: Callable | None = None, note: str = "") -> bool:
        """Compare a computed value with the expected one (canonical equality by default)."""
        if name not in self.scenario.expected:
            raise ScenarioError(f"{self.scenario.id}: no expected value named {name!r}")
        exp = self.scenario.expected[name].value
        c = canon(computed, self.generator)
        ok = compare(exp, computed) if compare else _equal(exp, c)
        self._record(name, c, PASS if ok else FAIL, note)
        return ok

    def indeterminate(self, name: str, reason: str) -> None:
        self._record(name, None, INDETERMINATE, reason)

    def wants(self, name: str) -> bool:
        """Optional checks run only with --optional."""
        e = self.scenario.expected.get(name)
        return e is not None and (not e.optional or self.optional_enabled)

    def skip_optional(self, name: str) -> None:
        self._record(name, None, INDETERMINATE, "optional check not requested")

    def note(self, text: str) -> None:
        self.cert.notes.append(text)

    def timed(self, label: str, fn, *args, **kw):
        t = time.perf_counter()
        try:
            return fn(*args, **kw)
        finally:
            self.cert.timings[label] = self.cert.timings.get(label, 0.0) + time.perf_counter() - t

    def finish(self) -> Certificate:
        for name in self.scenario.expected:
            if name not in self._used:
                self._record(name, None, FAIL, "not evaluated")
        self.cert.timings["total"] = time.perf_counter() - self._t0
        return self.cert


def _equal(expected, computed) -> bool:
    return canon(expected) == computed


REGISTRY: dict = {}


def scenario(sid: str):
    def deco(fn):
        REGISTRY[sid] = fn
        return fn

    return deco


def run_scenario(sc: Scenario, budget: Budget | None = None, optional: bool = False) -> Certificate:
    from . import scenarios  # noqa: F401  (fills the registry)

    if sc.id not in REGISTRY:
        raise ScenarioError(f"unknown scenario {sc.id!r}")
    budget = budget or Budget(**{k: v for k, v in sc.budget.items() if k in Budget.__dataclass_fields__})
    run = Run(sc, budget, optional)
    try:
        REGISTRY[sc.id](run, sc)
    except BudgetExceeded as exc:
        for name in sc.expected:
            if name not in run._used:
                run.indeterminate(name, str(exc))
    except (PolySyntaxError, KeyError, ScenarioError) as exc:
        raise ScenarioError(f"{sc.id}: {exc}") from exc
    return run.finish()
