"""Plane curves: singular points, tangents, flexes and intersections."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..ideals import Budget, Ideal, NotZeroDimensional, solve_zero_dim
from ..poly.ring import MultiPoly, PolyRing, make_ring
from ..poly.roots import split_off_roots
from ..poly.univariate import UPoly, upoly_from_multipoly, upoly_gcd
from .local import (
    INFINITE,
    SingularityReport,
    classify_ADE,
    intersection_multiplicity,
    local_dict,
    order_of,
)
from .points import ProjPoint


class NonReducedCurve(ValueError):
    pass


class CommonComponent(ValueError):
    pass


class PlaneCurve:
    """A curve F = 0 in P^2, F homogeneous in the three variables of its ring."""

    def __init__(self, form: MultiPoly, name: str = ""):
        if not form:
            raise ValueError("zero form does not define a curve")
        if form.ring.nvars != 3:
            raise ValueError("plane curves need a ring in three variables")
        if not form.is_homogeneous():
            raise ValueError("form is not homogeneous")
        self.form = form
        self.degree = form.total_degree()
        self.name = name

    @property
    def ring(self) -> PolyRing:
        return self.form.ring

    @property
    def field(self):
        return self.form.ring.field

    def contains(self, p: ProjPoint) -> bool:
        return not self.form.evaluate(p.coords)

    def __repr__(self):
        return f"PlaneCurve({self.form})"


def _form(C) -> MultiPoly:
    return C.form if isinstance(C, PlaneCurve) else C


def plane_ring(field, names: str = "x y z") -> PolyRing:
    return make_ring(names, field)


# --- solving homogeneous systems in P^2 -------------------------------------------


@dataclass
class ProjectiveSolutions:
    points: list
    residual: list = dc_field(default_factory=list)  # (chart, variable, factor, partial assignment)


def projective_solutions(forms, budget: Budget | None = None) -> ProjectiveSolutions:
    """Common zeros in P^2 of homogeneous forms, over the coefficient field.

    Chart z = 1 is solved with a lex Groebner basis; the line z = 0 is
    handled by a univariate gcd.  Points whose coordinates need a larger
    field come back as residual factors.
    """
    forms = [f for f in forms if f]
    if not forms:
        raise NotZeroDimensional("no equations")
    ring = forms[0].ring
    K = ring.field
    X, Y, Z = ring.vars
    aff = PolyRing(K, [X, Y], "grevlex")
    gens = [aff.convert(f.substitute({Z: 1})) for f in forms]
    gens = [g for g in gens if g]
    points, residual = [], []
    if gens:
        sol = solve_zero_dim(Ideal(aff, gens), budget=budget)
        for x, y in sol.points:
            points.append(ProjPoint((x, y, 1), K))
        residual.extend(("z=1",) + tuple(r) for r in sol.residual)
    else:
        raise NotZeroDimensional("forms share a component")
    # points [x : 1 : 0]
    g = None
    for f in forms:
        u = _restrict_uni(f, {Y: 1, Z: 0}, X)
        g = u if g is None else upoly_gcd(g, u)
    if g is not None and not g:
        raise NotZeroDimensional("forms share the line z = 0")
    if g.degree > 0:
        rm, rest = split_off_roots(g)
        points.extend(ProjPoint((r, 1, 0), K) for r, _ in rm)
        if rest.degree > 0:
            residual.append(("z=0", X, rest, {}))
    if all(not f.evaluate((1, 0, 0)) for f in forms):
        points.append(ProjPoint((1, 0, 0), K))
    points = sorted(set(points), key=lambda p: p.sort_key())
    return ProjectiveSolutions(points, residual)


def _restrict_uni(f: MultiPoly, assign: dict, var: str) -> UPoly:
    g = f.substitute(assign)
    return upoly_from_multipoly(g, var)


# --- singularities -------------------------------------------------------------------


@dataclass
class SingularLocus:
    points: list
    residual: list


def singular_points(C, budget: Budget | None = None) -> SingularLocus:
    F = _form(C)
    eqs = [F] + F.jacobian()
    try:
        sol = projective_solutions(eqs, budget=budget)
    except NotZeroDimensional as exc:
        raise NonReducedCurve("singular locus is not finite: the curve is not reduced") from exc
    return SingularLocus(sol.points, sol.residual)


def singularity_reports(C, budget: Budget | None = None) -> list:
    F = _form(C)
    return [classify_ADE(F, p) for p in singular_points(F, budget).points]


def is_smooth_at(C, p: ProjPoint) -> bool:
    F = _form(C)
    return order_of(local_dict(F, p)) == 1


# --- tangent lines and restriction -------------------------------------------------


def tangent_line(C, p: ProjPoint) -> MultiPoly:
    F = _form(C)
    if F.evaluate(p.coords):
        raise ValueError(f"{p} is not on the curve")
    grads = [d.evaluate(p.coords) for d in F.jacobian()]
    if not any(grads):
        raise ValueError(f"{p} is a singular point")
    X = F.ring.gens()
    out = F.ring.zero()
    for g, x in zip(grads, X):
        if g:
            out = out + x * g
    return out


@dataclass
class RestrictedForm:
    """F restricted to a line, as a binary form in the two kept variables."""

    form: MultiPoly
    kept: tuple
    eliminated: str
    expression: MultiPoly  # eliminated variable in terms of the kept ones

    def parameter_of(self, p: ProjPoint):
        ring = self.form.ring
        src = self.expression.ring
        a = p.coords[src.index(self.kept[0])]
        b = p.coords[src.index(self.kept[1])]
        return a, b

    def root_multiplicity(self, p: ProjPoint) -> int:
        a, b = self.parameter_of(p)
        return binary_root_multiplicity(self.form, a, b)


def restrict_to_line(C, L: MultiPoly, solve_for: str | None = None) -> RestrictedForm:
    F = _form(C)
    ring = F.ring
    coeffs = [L.coefficient(tuple(1 if i == k else 0 for i in range(3))) for k in range(3)]
    if L.total_degree() != 1 or not L.is_homogeneous():
        raise ValueError("not a linear form")
    if solve_for is None:
        for k in (1, 2, 0):
            if coeffs[k]:
                solve_for = ring.vars[k]
                break
    k = ring.index(solve_for)
    if not coeffs[k]:
        raise ValueError(f"line does not involve {solve_for}")
    kept = tuple(v for v in ring.vars if v != solve_for)
    expr = ring.zero()
    for i, v in enumerate(ring.vars):
        if i != k and coeffs[i]:
            expr = expr - ring.var(v) * (coeffs[i] / coeffs[k])
    R = F.substitute({solve_for: expr})
    if not R:
        raise ValueError("line is a component of the curve")
    sub = PolyRing(ring.field, list(kept), "lex")
    return RestrictedForm(sub.convert(R), kept, solve_for, expr)


def binary_root_multiplicity(form: MultiPoly, a, b) -> int:
    """Multiplicity of the root (a : b) of a binary form."""
    s, t = form.ring.vars
    if b:
        u = upoly_from_multipoly(form.substitute({t: 1}), s)
        return u.root_multiplicity(a / b)
    u = upoly_from_multipoly(form.substitute({s: 1}), t)
    return u.root_multiplicity(form.ring.field.zero)


def binary_roots(form: MultiPoly):
    """Roots (a : b) of a binary form with multiplicities, plus the rootless cofactor."""
    s, t = form.ring.vars
    K = form.ring.field
    u = upoly_from_multipoly(form.substitute({t: 1}), s)
    rm, rest = split_off_roots(u)
    roots = [((r, K.one), m) for r, m in rm]
    d = form.total_degree()
    if u.degree < d:
        roots.append(((K.one, K.zero), d - u.degree))
    return roots, rest


# --- Hessian and flexes ------------------------------------------------------------------


def hessian(F: MultiPoly) -> MultiPoly:
    d = F.jacobian()
    H = [[di.diff(v) for v in F.ring.vars] for di in d]
    (a, b, c), (e, f, g), (h, i, j) = H
    return a * (f * j - g * i) - b * (e * j - g * h) + c * (e * i - f * h)


@dataclass
class Flex:
    point: ProjPoint
    tangent: MultiPoly
    contact: int


@dataclass
class FlexSearch:
    flexes: list
    residual: list
    singular: list


def flexes(C, budget: Budget | None = None) -> FlexSearch:
    """Smooth points whose tangent meets the curve to order >= 3.

    Candidates come from the Hessian; each one is certified by the root
    multiplicity of F restricted to its tangent line.
    """
    F = _form(C)
    H = hessian(F)
    sing = set(singular_points(F, budget).points)
    sol = projective_solutions([F, H], budget=budget)
    out = []
    for p in sol.points:
        if p in sing:
            continue
        T = tangent_line(F, p)
        try:
            contact = restrict_to_line(F, T).root_multiplicity(p)
        except ValueError:
            contact = INFINITE
        if contact >= 3:
            out.append(Flex(p, T, contact))
    return FlexSearch(out, sol.residual, sorted(sing, key=lambda p: p.sort_key()))


def residual_point_on_tangent(C, flex: Flex) -> ProjPoint | None:
    """For a quartic flex with contact 3, the fourth intersection of the tangent."""
    F = _form(C)
    rf = restrict_to_line(F, flex.tangent)
    a, b = rf.parameter_of(flex.point)
    roots, rest = binary_roots(rf.form)
    others = [(r, m) for r, m in roots if not _same_p1(r, (a, b))]
    if len(others) != 1 or rest.degree > 0:
        return None
    (s, t), _ = others[0]
    return _point_from_parameter(rf, s, t)


def _same_p1(r, q) -> bool:
    return r[0] * q[1] == r[1] * q[0]


def _point_from_parameter(rf: RestrictedForm, s, t) -> ProjPoint:
    ring = rf.expression.ring
    vals = {rf.kept[0]: s, rf.kept[1]: t}
    e = rf.expression.substitute(vals).constant_coeff()
    vals[rf.eliminated] = e
    return ProjPoint([vals[v] for v in ring.vars], ring.field)


# --- intersections -------------------------------------------------------------------------


@dataclass
class IntersectionData:
    points: list  # (ProjPoint, multiplicity)
    residual: list

    def total(self):
        return sum(m for _, m in self.points)


def intersect(C, D, budget: Budget | None = None) -> IntersectionData:
    F, G = _form(C), _form(D)
    try:
        sol = projective_solutions([F, G], budget=budget)
    except NotZeroDimensional as exc:
        raise CommonComponent("curves share a component") from exc
    pts = []
    for p in sol.points:
        m = intersection_multiplicity(F, G, p)
        if m == INFINITE:
            raise CommonComponent(f"curves share a component through {p}")
        pts.append((p, m))
    return IntersectionData(pts, sol.residual)


def point_report(F: MultiPoly, p: ProjPoint) -> SingularityReport:
    return classify_ADE(F, p)
