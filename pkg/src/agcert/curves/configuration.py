"""The quartic flex configuration: a node, two cusps, two flexes whose
tangent lines meet the curve again at points collinear with the node."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..arith import NumberField, QQ, Rat
from ..ideals import Budget
from ..poly.ring import MultiPoly, make_ring
from ..poly.univariate import squarefree_part
from .local import classify_ADE
from .plane import flexes, residual_point_on_tangent, singular_points
from .points import collinear, line_through


@dataclass
class ConfigurationReport:
    field: NumberField
    singular: list = dc_field(default_factory=list)  # (point, label)
    flexes: list = dc_field(default_factory=list)  # (point, tangent, contact)
    residual_points: list = dc_field(default_factory=list)
    node_on_line: bool = False
    holds: bool = False
    reason: str = ""

    @property
    def labels(self) -> list:
        return sorted(lbl for _, lbl in self.singular)


def squarefree_integer(n: int) -> int:
    """The squarefree part of a nonzero integer, keeping its sign."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
        if n % p == 0:
            out *= p
            n //= p
        p += 1
    return sign * out * n


def squarefree_rational(q) -> int:
    q = Rat(q)
    return squarefree_integer(int(q.numerator) * int(q.denominator))


def quadratic_field(d: int) -> NumberField:
    """Q(sqrt d) as Q[t]/(t^2 - d); Q itself when d = 1."""
    if d == 1:
        return QQ
    return NumberField([-d, 0, 1], gen="r")


def check_configuration(F: MultiPoly, budget: Budget | None = None) -> ConfigurationReport:
    """Evaluate the configuration over the coefficient field of F."""
    K = F.ring.field
    rep = ConfigurationReport(K)
    sing = singular_points(F, budget)
    if sing.residual:
        rep.reason = "singular points outside the field"
        return rep
    rep.singular = [(p, classify_ADE(F, p).label) for p in sing.points]
    if rep.labels != ["a1", "a2", "a2"]:
        rep.reason = f"singularities {rep.labels}"
        return rep
    node = next(p for p, lbl in rep.singular if lbl == "a1")
    fs = flexes(F, budget)
    if fs.residual:
        rep.reason = "flexes outside the field"
        return rep
    rep.flexes = [(f.point, f.tangent, f.contact) for f in fs.flexes]
    if len(fs.flexes) != 2 or any(f.contact != 3 for f in fs.flexes):
        rep.reason = f"{len(fs.flexes)} flexes"
        return rep
    res = [residual_point_on_tangent(F, f) for f in fs.flexes]
    if any(r is None for r in res):
        rep.reason = "tangent meets the curve again outside the field"
        return rep
    rep.residual_points = res
    if res[0] == res[1]:
        rep.reason = "residual points coincide"
        return rep
    rep.node_on_line = collinear(res[0], res[1], node)
    rep.holds = rep.node_on_line
    rep.reason = "" if rep.holds else "node is off the line through the residual points"
    return rep


def flex_field(F: MultiPoly, budget: Budget | None = None):
    """Quadratic field over which the flexes of a rational quartic are defined.

    Returns the squarefree d, or None when the leftover flex equations are
    not quadratic or disagree.
    """
    fs = flexes(F, budget)
    ds = set()
    for item in fs.residual:
        u = item[2]
        u = squarefree_part(u)
        if u.degree != 2:
            return None
        c0, c1, c2 = u.c
        ds.add(squarefree_rational(c1 * c1 - 4 * c0 * c2))
    if len(ds) > 1:
        return None
    return ds.pop() if ds else 1


def pencil_member(a, field: NumberField = QQ) -> MultiPoly:
    R = make_ring("x y z", field)
    S = R.parse("x^2+x*y+y^2-x*z-y*z")
    T = R.parse("x*y*(x+y-z)^2")
    return S * S + T * field(a)


def configuration_for_parameter(a, budget: Budget | None = None) -> ConfigurationReport:
    """Run the configuration check on the pencil member with parameter a,
    over the quadratic field that carries its flexes."""
    F = pencil_member(a)
    d = flex_field(F, budget)
    if d is None:
        rep = ConfigurationReport(QQ)
        rep.reason = "flexes are not defined over a quadratic field"
        return rep
    L = quadratic_field(d)
    if L is QQ:
        return check_configuration(F, budget)
    R = make_ring("x y z", L)
    return check_configuration(F.map_coeffs(L, R), budget)
