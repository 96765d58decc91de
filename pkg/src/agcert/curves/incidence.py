"""Incidence tables for arrangements of plane curves."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field

from ..arith import nf_embed
from ..ideals import Budget
from ..poly.ring import MultiPoly, PolyRing
from .plane import intersect
from .points import ProjPoint


@dataclass
class IncidenceTable:
    names: list
    points: list
    membership: list  # membership[i][k]: curve i passes through point k
    pair_mult: dict  # (i, j) -> {point index: multiplicity}
    residual: dict = dc_field(default_factory=dict)

    def column(self, k: int) -> tuple:
        """Entries '0', '1' or '1+' (non-transverse meeting at the point)."""
        out = []
        for i in range(len(self.names)):
            if not self.membership[i][k]:
                out.append("0")
                continue
            tangent = any(
                m.get(k, 0) > 1 for (a, b), m in self.pair_mult.items() if i in (a, b)
            )
            out.append("1+" if tangent else "1")
        return tuple(out)

    def columns(self) -> list:
        return [self.column(k) for k in range(len(self.points))]

    def bezout_sums(self) -> dict:
        return {(self.names[a], self.names[b]): sum(m.values()) for (a, b), m in self.pair_mult.items()}

    def tangencies(self) -> list:
        """(point index, curve names, multiplicity) for every non-transverse meeting."""
        out = []
        for (a, b), m in sorted(self.pair_mult.items()):
            for k, v in sorted(m.items()):
                if v > 1:
                    out.append((k, (self.names[a], self.names[b]), v))
        return out

    def as_rows(self, generator: str = "r") -> dict:
        return {
            "points": [p.to_str(generator) for p in self.points],
            "rows": {n: [c[i] for c in self.columns()] for i, n in enumerate(self.names)},
        }


def incidence_table(curves, names=None, budget: Budget | None = None) -> IncidenceTable:
    forms = [c.form if hasattr(c, "form") else c for c in curves]
    names = list(names or [f"C{i + 1}" for i in range(len(forms))])
    pts: list = []
    index: dict = {}
    pair_mult = {}
    residual = {}
    for a in range(len(forms)):
        for b in range(a + 1, len(forms)):
            data = intersect(forms[a], forms[b], budget=budget)
            m = {}
            for p, mult in data.points:
                if p not in index:
                    index[p] = len(pts)
                    pts.append(p)
                m[index[p]] = mult
            pair_mult[(a, b)] = m
            if data.residual:
                residual[(names[a], names[b])] = data.residual
    order = sorted(range(len(pts)), key=lambda k: pts[k].sort_key())
    remap = {old: new for new, old in enumerate(order)}
    pts = [pts[k] for k in order]
    pair_mult = {ab: {remap[k]: v for k, v in m.items()} for ab, m in pair_mult.items()}
    membership = [[not f.evaluate(p.coords) for p in pts] for f in forms]
    return IncidenceTable(names, pts, membership, pair_mult, residual)


def same_pattern(table: IncidenceTable, expected_columns) -> bool:
    """Compare column multisets, which ignores the labelling of the points."""
    return Counter(table.columns()) == Counter(tuple(c) for c in expected_columns)


def extend_scalars(f: MultiPoly, target: PolyRing, gen_image) -> MultiPoly:
    """Map the coefficients of f into a larger field via gen -> gen_image."""
    K = target.field
    return f.map_coeffs(lambda c: nf_embed(c, K, gen_image), target)


def extend_point(p: ProjPoint, field, gen_image) -> ProjPoint:
    return ProjPoint([nf_embed(c, field, gen_image) for c in p.coords], field)
