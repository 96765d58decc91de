"""Gröbner bases, normal forms, elimination and zero-dimensional solving."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _kernels as K
from .arith import NFElem
from .poly.ring import MonomialOrder, MultiPoly, PolyRing
from .poly.roots import split_off_roots
from .poly.univariate import UPoly, upoly_from_multipoly, upoly_gcd


class BudgetExceeded(RuntimeError):
    """A resource cap was hit; the computation is indeterminate, not wrong."""

    def __init__(self, resource: str, limit, detail: str = ""):
        super().__init__(f"{resource} budget exceeded (limit {limit}){': ' + detail if detail else ''}")
        self.resource = resource
        self.limit = limit


class NotZeroDimensional(ValueError):
    pass


@dataclass
class Budget:
    max_pairs: int | None = None
    max_basis: int | None = None
    max_bits: int | None = None
    max_seconds: float | None = None

    def as_dict(self):
        return {
            "max_pairs": self.max_pairs,
            "max_basis": self.max_basis,
            "max_bits": self.max_bits,
            "max_seconds": self.max_seconds,
        }


DEFAULT_BUDGET = Budget()
_NORMAL_KINDS = {"lex", "block"}


@dataclass
class GBStats:
    pairs: int = 0
    reductions: int = 0
    zero_reductions: int = 0
    max_bits: int = 0
    seconds: float = 0.0


class Ideal:
    def __init__(self, ring: PolyRing, gens: Iterable[MultiPoly]):
        self.ring = ring
        gs = []
        for g in gens:
            if g.ring != ring:
                g = ring.convert(g)
            if g:
                gs.append(g)
        self.gens = gs

    def __repr__(self):
        return f"Ideal<{', '.join(str(g) for g in self.gens)}>"


@dataclass
class GroebnerBasis:
    ring: PolyRing
    basis: list
    stats: GBStats = field(default_factory=GBStats)

    def __post_init__(self):
        self._red = [_reducer(g) for g in self.basis]

    def reduce(self, f: MultiPoly) -> MultiPoly:
        if f.ring != self.ring:
            f = self.ring.convert(f)
        rem, _ = K.normal_form(f.terms, self._red, self.ring.low_mask, self.ring.guard)
        return MultiPoly(self.ring, rem)

    def contains(self, f: MultiPoly) -> bool:
        return not self.reduce(f)

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def lead_monomials(self):
        return [g.lead_exps() for g in self.basis]


def _reducer(g: MultiPoly):
    lk = g.lead_key()
    return (lk, lk & g.ring.low_mask, [(k, c) for k, c in g.terms.items() if k != lk])


def _coeff_bits(c) -> int:
    if isinstance(c, NFElem):
        return max(_coeff_bits(x) for x in c.c)
    return int(c.numerator).bit_length() + int(c.denominator).bit_length()


def _lcm_key(ring: PolyRing, a: int, b: int) -> int:
    ea, eb = ring.decode(a), ring.decode(b)
    return ring.encode([max(x, y) for x, y in zip(ea, eb)])


def _coprime(ring: PolyRing, a: int, b: int) -> bool:
    return (a & b & ring.low_mask) == 0 and all(
        not (x and y) for x, y in zip(ring.decode(a), ring.decode(b))
    )


def _divides(ring: PolyRing, a: int, b: int) -> bool:
    return K.divides_key(a & ring.low_mask, b & ring.low_mask, ring.guard)


def buchberger(I: Ideal, order=None, budget: Budget | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis with Gebauer–Möller pair criteria and sugar selection."""
    ring = I.ring if order is None else I.ring.with_order(order)
    budget = budget or DEFAULT_BUDGET
    stats = GBStats()
    t0 = time.perf_counter()
    polys: list[dict] = []
    leads: list[int] = []
    sugars: list[int] = []
    G: list[int] = []
    B: list[tuple] = []  # (sugar, lcm, i, j)

    def check_time():
        if budget.max_seconds is not None and time.perf_counter() - t0 > budget.max_seconds:
            raise BudgetExceeded("time", budget.max_seconds, f"{stats.pairs} pairs processed")

    red: list[tuple] = []
    # sugar suits degree orders; for lex the normal strategy (smallest lcm) works far better
    select = (lambda p: p[1]) if ring.order.kind in _NORMAL_KINDS else (lambda p: (p[0], p[1]))
    deadline = None if budget.max_seconds is None else t0 + budget.max_seconds

    def reduce(poly):
        try:
            return K.normal_form(poly, reducers(), ring.low_mask, ring.guard, deadline)
        except K.DeadlineExceeded:
            raise BudgetExceeded("time", budget.max_seconds, f"{stats.pairs} pairs processed, inside a reduction") from None

    def reducers():
        return [red[i] for i in G]

    def add(h: dict, sugar: int):
        nonlocal G, B
        lk = max(h)
        inv = 1 / h[lk]
        if h[lk] != 1:
            h = {k: c * inv for k, c in h.items()}
        idx = len(polys)
        polys.append(h)
        leads.append(lk)
        sugars.append(sugar)
        red.append((lk, lk & ring.low_mask, [(k, c) for k, c in h.items() if k != lk]))
        bits = max(_coeff_bits(c) for c in h.values())
        stats.max_bits = max(stats.max_bits, bits)
        if budget.max_bits is not None and bits > budget.max_bits:
            raise BudgetExceeded("coefficient bits", budget.max_bits, f"{bits} bits")
        # Gebauer-Moller update
        C = [(g, _lcm_key(ring, leads[g], lk)) for g in G]
        D = []
        while C:
            g1, l1 = C.pop(0)
            if _coprime(ring, leads[g1], lk):
                D.append((g1, l1))
                continue
            redundant = False
            for _, l2 in C:
                if _divides(ring, l2, l1):
                    redundant = True
                    break
            if not redundant:
                for _, l2 in D:
                    if _divides(ring, l2, l1):
                        redundant = True
                        break
            if not redundant:
                D.append((g1, l1))
        E = [(g, l) for g, l in D if not _coprime(ring, leads[g], lk)]
        Bn = []
        for p in B:
            _, l12, i, j = p
            if _divides(ring, lk, l12):
                lih = _lcm_key(ring, leads[i], lk)
                ljh = _lcm_key(ring, leads[j], lk)
                if lih != l12 and ljh != l12:
                    continue
            Bn.append(p)
        for g, l in E:
            dl = ring.key_degree(l)
            s = max(sugars[g] + dl - ring.key_degree(leads[g]), sugar + dl - ring.key_degree(lk))
            Bn.append((s, l, g, idx))
        B = Bn
        G = [g for g in G if not _divides(ring, lk, leads[g])] + [idx]
        if budget.max_basis is not None and len(G) > budget.max_basis:
            raise BudgetExceeded("basis size", budget.max_basis)

    gens = [ring.convert(g) for g in I.gens]
    gens.sort(key=lambda g: (g.total_degree(), g.lead_key()))
    for g in gens:
        rem, _ = reduce(g.terms)
        if rem:
            add(rem, g.total_degree())
    while B:
        check_time()
        B.sort(key=select)
        s, l, i, j = B.pop(0)
        stats.pairs += 1
        if budget.max_pairs is not None and stats.pairs > budget.max_pairs:
            raise BudgetExceeded("pairs", budget.max_pairs, f"basis size {len(G)}")
        sp = K.poly_add_scaled(
            K.poly_mul_term(polys[i], l - leads[i], 1),
            polys[j],
            -1,
            l - leads[j],
        )
        rem, steps = reduce(sp)
        stats.reductions += steps
        if rem:
            add(rem, s)
        else:
            stats.zero_reductions += 1
    try:
        basis = _interreduce(ring, [MultiPoly(ring, polys[i]) for i in G], deadline)
    except K.DeadlineExceeded:
        raise BudgetExceeded("time", budget.max_seconds, "during final interreduction") from None
    stats.seconds = time.perf_counter() - t0
    return GroebnerBasis(ring, basis, stats)


def _interreduce(ring: PolyRing, gs: list, deadline=None) -> list:
    gs = [g.monic() for g in gs if g]
    # drop elements whose leading monomial is divisible by another's
    keep = []
    for a in sorted(gs, key=lambda g: g.lead_key()):
        if not any(_divides(ring, b.lead_key(), a.lead_key()) for b in keep):
            keep.append(a)
    out = []
    for i, g in enumerate(keep):
        others = [_reducer(h) for j, h in enumerate(keep) if j != i]
        rem, _ = K.normal_form(g.terms, others, ring.low_mask, ring.guard, deadline)
        out.append(MultiPoly(ring, rem).monic())
    out.sort(key=lambda g: g.lead_key(), reverse=True)
    return out


def spoly(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    ring = f.ring
    l = _lcm_key(ring, f.lead_key(), g.lead_key())
    a = f.mul_term(l - f.lead_key(), 1 / f.lead_coeff())
    b = g.mul_term(l - g.lead_key(), 1 / g.lead_coeff())
    return a - b


def is_reduced_groebner(G: GroebnerBasis) -> bool:
    """Check the defining properties: S-pairs reduce to zero, basis is reduced and monic."""
    basis = G.basis
    ring = G.ring
    for i, g in enumerate(basis):
        if g.lead_coeff() != 1:
            return False
        for j, h in enumerate(basis):
            if i == j:
                continue
            hl = h.lead_key() & ring.low_mask
            for k in g.terms:
                if K.divides_key(hl, k & ring.low_mask, ring.guard):
                    return False
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if G.reduce(spoly(basis[i], basis[j])):
                return False
    return True


def groebner(gens: Sequence[MultiPoly], order=None, budget: Budget | None = None) -> GroebnerBasis:
    gens = list(gens)
    return buchberger(Ideal(gens[0].ring, gens), order, budget)


def normal_form(f: MultiPoly, G: GroebnerBasis) -> MultiPoly:
    return G.reduce(f)


def member(f: MultiPoly, I: Ideal, order=None, budget: Budget | None = None) -> bool:
    G = buchberger(I, order, budget)
    return G.contains(f)


def ideals_equal(I: Ideal, J: Ideal, budget: Budget | None = None) -> bool:
    GI = buchberger(I, budget=budget)
    GJ = buchberger(J, budget=budget)
    return all(GI.contains(g) for g in J.gens) and all(GJ.contains(g) for g in I.gens)


def elimination_ideal(I: Ideal, drop: Iterable[str], budget: Budget | None = None) -> Ideal:
    """Generators of I intersected with the subring without the ``drop`` variables."""
    ring = I.ring
    drop = [v for v in ring.vars if v in set(drop)]
    keep = [v for v in ring.vars if v not in drop]
    if not drop:
        return I
    if not keep:
        raise ValueError("cannot eliminate every variable")
    elim_ring = PolyRing(ring.field, drop + keep, MonomialOrder("block", len(drop)))
    G = buchberger(Ideal(elim_ring, [elim_ring.convert(g) for g in I.gens]), budget=budget)
    sub = PolyRing(ring.field, keep, "grevlex")
    dset = set(drop)
    gens = [sub.convert(g) for g in G.basis if not (g.variables() & dset)]
    out = Ideal(sub, gens)
    out.groebner = G
    return out


def divide_out(f: MultiPoly, g: MultiPoly):
    """(f / g^k, k) for the largest k with g^k dividing f."""
    if g.is_constant():
        raise ValueError("divisor must be nonconstant")
    k = 0
    while f:
        q, r = f.divmod_single(g)
        if r:
            break
        f = q
        k += 1
    return f, k


# --- zero-dimensional solving --------------------------------------------------


@dataclass
class SolutionSet:
    variables: tuple
    points: list
    residual: list  # (variable, UPoly factor, partial assignment dict)

    def residual_degree(self) -> int:
        return sum(f.degree for _, f, _ in self.residual)


def _is_zero_dim(G: GroebnerBasis, variables) -> bool:
    ring = G.ring
    leads = [g.lead_exps() for g in G.basis]
    for v in variables:
        i = ring.index(v)
        if not any(e[i] > 0 and sum(e) == e[i] for e in leads):
            return False
    return True


def solve_zero_dim(I: Ideal, variables: Sequence[str] | None = None, budget: Budget | None = None) -> SolutionSet:
    """All solutions with coordinates in the working field, plus unresolved factors."""
    ring = I.ring
    variables = tuple(variables or ring.vars)
    lex_ring = PolyRing(ring.field, variables, "lex")
    gens = [lex_ring.convert(g) for g in I.gens]
    points, residual = _solve(lex_ring, gens, {}, budget, top=True)
    for p in points:
        for g in I.gens:
            if g.evaluate([p[v] for v in ring.vars]):
                raise AssertionError("solver produced a non-solution")
    points = [tuple(p[v] for v in variables) for p in points]
    return SolutionSet(variables, points, residual)


def _solve(ring: PolyRing, gens, assigned, budget, top=False):
    gens = [g for g in gens if g]
    if not gens:
        if len(assigned) == ring.nvars:
            return [dict(assigned)], []
        raise NotZeroDimensional("system has positive-dimensional components")
    if len(ring.vars) == 1:
        v = ring.vars[0]
        g = UPoly(ring.field, [])
        for p in gens:
            g = upoly_gcd(g, upoly_from_multipoly(p, v)) if g else upoly_from_multipoly(p, v).monic()
        if g.degree <= 0:
            return [], []
        rm, rest = split_off_roots(g)
        pts = [dict(assigned, **{v: r}) for r, _ in rm]
        res = [(v, rest, dict(assigned))] if rest.degree > 0 else []
        return pts, res
    G = buchberger(Ideal(ring, gens), budget=budget)
    if G.is_unit():
        return [], []
    if not _is_zero_dim(G, ring.vars):
        raise NotZeroDimensional("ideal is not zero-dimensional")
    last = ring.vars[-1]
    uni = [g for g in G.basis if g.variables() <= {last}]
    elim = upoly_from_multipoly(uni[0], last)
    rm, rest = split_off_roots(elim)
    points, residual = [], []
    if rest.degree > 0:
        residual.append((last, rest, dict(assigned)))
    sub_ring = PolyRing(ring.field, ring.vars[:-1], "lex")
    for r, _ in rm:
        spec = [sub_ring.convert(g.substitute({last: r})) for g in G.basis]
        spec = [g for g in spec if g]
        pts, res = _solve(sub_ring, spec, dict(assigned, **{last: r}), budget)
        points.extend(pts)
        residual.extend(res)
    return points, residual
