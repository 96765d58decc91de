"""Invariant forms of finite 2x2 groups: Reynolds averaging, Molien series, mirror images."""

from __future__ import annotations

from dataclasses import dataclass

from ..arith import Rat
from ..curves.linsys import monomials_of_degree
from ..curves.local import classify_local, order_of, poly_to_dict
from ..ideals import Budget, Ideal, elimination_ideal
from ..linalg import rank, rref
from ..poly.ring import MultiPoly, PolyRing
from .groups import MatGroup, NFMatrix

DEGREE_BOUND = 16


def act(f: MultiPoly, g: NFMatrix) -> MultiPoly:
    """f composed with g, i.e. f(g . (x, y))."""
    ring = f.ring
    X = ring.gens()
    images = []
    for row in g.rows:
        h = ring.zero()
        for a, x in zip(row, X):
            if a:
                h = h + x * a
        images.append(h)
    return f.substitute(dict(zip(ring.vars, images)))


def reynolds(f: MultiPoly, G: MatGroup) -> MultiPoly:
    acc = f.ring.zero()
    for g in G.elements:
        acc = acc + act(f, g)
    return acc * Rat(1, G.order)


def reynolds_invariants(G: MatGroup, ring: PolyRing, degree: int, bound: int = DEGREE_BOUND) -> list:
    """Echelonized basis of the degree-d invariants."""
    if degree > bound:
        raise ValueError(f"degree {degree} exceeds the bound {bound}")
    mons = monomials_of_degree(ring.nvars, degree)
    K = ring.field
    rows = []
    for e in mons:
        r = reynolds(ring.monomial(e), G)
        rows.append([r.coefficient(m) for m in mons])
    if not rows:
        return []
    ech, piv = rref(rows)
    out = []
    for row in ech[: len(piv)]:
        out.append(ring.from_terms((m, c) for m, c in zip(mons, row) if c))
    return out


def molien_series(G: MatGroup, terms: int) -> list:
    """Coefficients of (1/|G|) sum_g 1/det(1 - t g), up to t^(terms-1)."""
    K = G.field
    total = [K.zero] * terms
    for g in G.elements:
        if g.n != 2:
            raise ValueError("only 2x2 groups")
        tr, dt = g.trace(), g.det()
        c = [K.one]
        for k in range(1, terms):
            v = tr * c[k - 1]
            if k >= 2:
                v = v - dt * c[k - 2]
            c.append(v)
        total = [a + b for a, b in zip(total, c)]
    out = []
    for a in total:
        a = a / G.order
        if hasattr(a, "is_rational") and not a.is_rational():
            raise ArithmeticError("Molien coefficient is not rational")
        out.append(int(K.coeffs_of(a)[0]) if hasattr(a, "is_rational") else int(a))
    return out


def is_invariant(f: MultiPoly, G: MatGroup) -> bool:
    return all(act(f, g) == f for g in G.elements)


# --- images of lines under the invariant map ----------------------------------------------


@dataclass
class MirrorImageReport:
    curve: MultiPoly  # affine plane curve in the first two invariant coordinates
    multiplicity: int
    milnor: object
    label: str
    lines: list


def _line_image(invs, direction, offset, budget: Budget | None) -> MultiPoly:
    """Implicit equation of s -> (f1, f2)(offset + s * direction)."""
    K = invs[0].ring.field
    E = PolyRing(K, ["s", "X", "Y"], "grevlex")
    s = E.var("s")
    pt = [E.const(o) + s * d for o, d in zip(offset, direction)]
    gens = []
    for name, f in zip(("X", "Y"), invs[:2]):
        h = f.substitute(dict(zip(f.ring.vars, pt)), target=E)
        gens.append(E.var(name) - h)
    elim = elimination_ideal(Ideal(E, gens), ["s"], budget=budget)
    if len(elim.gens) != 1:
        raise ValueError("image of the line is not a plane curve")
    return elim.gens[0].monic()


def line_image_singularity(invs, direction, offset=(0, 0), budget: Budget | None = None) -> MirrorImageReport:
    g = _line_image(invs, direction, offset, budget)
    d = poly_to_dict(g)
    m = order_of(d)
    if m == 0:
        return MirrorImageReport(g, 0, 0, "not on curve", [direction])
    if m == 1:
        return MirrorImageReport(g, 1, 0, "smooth", [direction])
    m, mu, label = classify_local(d)
    return MirrorImageReport(g, m, mu, label, [direction])


def mirror_image_cusp_check(G: MatGroup, mirror_lines, invs, budget: Budget | None = None) -> MirrorImageReport:
    """Image of the union of the mirror lines in the (f1, f2) plane, classified at the origin.

    The mirrors form one orbit when the images coincide; the union image is
    then that single curve.
    """
    curves = []
    for v in mirror_lines:
        g = _line_image(invs, v, (0, 0), budget)
        if g not in curves:
            curves.append(g)
    union = curves[0]
    for g in curves[1:]:
        union = union * g
    d = poly_to_dict(union)
    m = order_of(d)
    if m < 2:
        return MirrorImageReport(union, m, 0, "smooth" if m == 1 else "not on curve", list(mirror_lines))
    m, mu, label = classify_local(d)
    return MirrorImageReport(union, m, mu, label, list(mirror_lines))


def relation_singularity(relation: MultiPoly) -> tuple:
    """Multiplicity and rank of the quadratic part at the origin of a surface f = 0."""
    d = {}
    for key, c in relation.terms.items():
        d[relation.ring.decode(key)] = c
    m = min(sum(e) for e in d)
    if m != 2:
        return m, None
    n = relation.ring.nvars
    K = relation.ring.field
    Q = [[K.zero] * n for _ in range(n)]
    for e, c in d.items():
        if sum(e) != 2:
            continue
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        i, j = idx
        if i == j:
            Q[i][i] = Q[i][i] + c
        else:
            Q[i][j] = Q[i][j] + c / 2
            Q[j][i] = Q[j][i] + c / 2
    return 2, rank(Q)


def weighted_relations(invs, names=("X", "Y", "Z"), degree: int | None = None) -> list:
    """Relations among the invariants in one weighted degree (default: the lowest one with any)."""
    if degree is None:
        wts = [f.total_degree() for f in invs]
        for d in range(1, 3 * max(wts) + 1):
            rels = weighted_relations(invs, names, d)
            if rels:
                return rels
        return []
    from ..linalg import kernel

    ring = invs[0].ring
    K = ring.field
    wts = [f.total_degree() for f in invs]
    R = PolyRing(K, list(names), "grevlex")
    exps = [e for e in _weighted_exponents(wts, degree)]
    values = []
    for e in exps:
        v = ring.one()
        for f, k in zip(invs, e):
            if k:
                v = v * f**k
        values.append(v)
    keys = sorted({k for v in values for k in v.terms})
    M = [[v.terms.get(k, K.zero) for v in values] for k in keys]
    out = []
    for vec in kernel(M, len(exps), K.zero, K.one):
        out.append(R.from_terms((e, c) for e, c in zip(exps, vec) if c))
    return out


def _weighted_exponents(wts, degree):
    if len(wts) == 1:
        if degree % wts[0] == 0:
            yield (degree // wts[0],)
        return
    for k in range(degree // wts[0], -1, -1):
        for rest in _weighted_exponents(wts[1:], degree - k * wts[0]):
            yield (k,) + rest
