"""Orbifold Chern numbers of a pair (W, Delta) and the BMY equality test."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .arith import Rat
from .surfaces import IntersectionTable


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "∞"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def parse_weight(w):
    if w is INF or w in ("inf", "oo", "∞", "infinity"):
        return INF
    return int(w)


def coweight(m) -> Rat:
    """1 - 1/m, with 1/∞ = 0."""
    if m is INF:
        return Rat(1)
    if m < 1:
        raise ValueError(f"bad weight {m}")
    return 1 - Rat(1, m)


@dataclass
class Stratum:
    name: str
    weight: object
    euler_open: int
    euler_closed: int | None = None  # Euler number of the whole curve, for the audit


@dataclass
class OrbifoldPoint:
    name: str
    beta: object
    on: tuple = ()  # names of the weighted curves through the point
    local_order: int | None = None  # order of the surface singularity (1 if smooth)


@dataclass
class OrbifoldSurface:
    e_underlying: int
    components: list
    points: list
    table: IntersectionTable = field(default_factory=IntersectionTable)
    allow_trivial_weights: bool = False

    def __post_init__(self):
        for c in self.components:
            if c.weight is not INF and (c.weight < 1 or (c.weight == 1 and not self.allow_trivial_weights)):
                raise ValueError(f"weight of {c.name} must be >= 2 or infinite")
        for p in self.points:
            if p.beta is None:
                raise ValueError(f"point {p.name} carries no isotropy order")
            if p.beta is not INF and p.beta < 1:
                raise ValueError(f"bad isotropy order at {p.name}")

    @property
    def delta(self) -> dict:
        return {c.name: coweight(c.weight) for c in self.components}

    def with_weight(self, name: str, weight) -> "OrbifoldSurface":
        comps = [Stratum(c.name, weight if c.name == name else c.weight, c.euler_open, c.euler_closed) for c in self.components]
        return OrbifoldSurface(self.e_underlying, comps, list(self.points), self.table, self.allow_trivial_weights)


def orb_c2(O: OrbifoldSurface) -> Rat:
    total = Rat(O.e_underlying)
    for c in O.components:
        total -= coweight(c.weight) * c.euler_open
    for p in O.points:
        total -= coweight(p.beta)
    return total


def orb_c1sq(O: OrbifoldSurface, canonical: str = "K") -> Rat:
    """(K + sum (1 - 1/m_i) C_i)^2 from the Mumford intersection table."""
    coeffs = {canonical: Rat(1)}
    for name, w in O.delta.items():
        coeffs[name] = coeffs.get(name, Rat(0)) + w
    total = Rat(0)
    for x, cx in coeffs.items():
        for y, cy in coeffs.items():
            if cx and cy:
                total += cx * cy * O.table.get(x, y)
    return total


@dataclass
class BMYResult:
    c1sq: Rat
    c2: Rat
    slack: Rat
    equality: bool


def bmy_check(O: OrbifoldSurface) -> BMYResult:
    c1, c2 = orb_c1sq(O), orb_c2(O)
    slack = 3 * c2 - c1
    return BMYResult(c1, c2, slack, slack == 0)


def derived_beta(O: OrbifoldPoint, weights: Mapping) -> object:
    """Local group order times the weights of the curves through the point.

    Valid when the weighted curves cross normally in the smooth or ADE chart,
    which covers every point of the scenario except the cusp of a curve.
    """
    if O.local_order is None:
        return None
    beta = O.local_order
    for name in O.on:
        w = weights[name]
        if w is INF:
            return INF
        beta *= w
    return beta


def strata_audit(O: OrbifoldSurface) -> dict:
    """For each component with known closed Euler number, e(C) - #points on C."""
    out = {}
    for c in O.components:
        if c.euler_closed is None:
            continue
        n = sum(1 for p in O.points if c.name in p.on)
        out[c.name] = (c.euler_closed - n, c.euler_open)
    return out


def flat_surface(e: int, k2) -> OrbifoldSurface:
    """A surface with empty boundary, e.g. P^2 with K^2 = 9, e = 3."""
    return OrbifoldSurface(e, [], [], IntersectionTable({("K", "K"): k2}))


def c2_monotone_in_weight(O: OrbifoldSurface, name: str, weights: Sequence[int]) -> list:
    return [orb_c2(O.with_weight(name, w)) for w in weights]
