"""Points of the projective plane over a number field."""

from __future__ import annotations

from ..arith import NFElem, NumberField, Rat
from ..poly.parser import format_coeff


class ProjPoint:
    """A point [x0 : x1 : x2], normalized so the last nonzero coordinate is 1."""

    __slots__ = ("coords", "field")

    def __init__(self, coords, field: NumberField):
        cs = [field(c) for c in coords]
        j = max((i for i, c in enumerate(cs) if c), default=None)
        if j is None:
            raise ValueError("all coordinates are zero")
        lead = cs[j]
        if lead != 1:
            cs = [c / lead for c in cs]
        self.coords = tuple(cs)
        self.field = field

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)

    def chart(self) -> int:
        """Index of the coordinate normalized to 1."""
        return max(i for i, c in enumerate(self.coords) if c)

    def to_str(self, generator: str = "r") -> str:
        return "[" + " : ".join(format_coeff(c, generator) for c in self.coords) + "]"

    def __repr__(self):
        return f"ProjPoint({self.to_str()})"

    def sort_key(self):
        out = []
        for c in self.coords:
            cs = c.c if isinstance(c, NFElem) else (c,)
            out.append(tuple(Rat(x) for x in cs))
        return tuple(out)


def point(coords, field: NumberField) -> ProjPoint:
    return ProjPoint(coords, field)


def det3(rows) -> object:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def collinear(p: ProjPoint, q: ProjPoint, s: ProjPoint) -> bool:
    return not det3([p.coords, q.coords, s.coords])


def line_through(p: ProjPoint, q: ProjPoint, ring):
    """The line through two distinct points, as a linear form in ``ring``."""
    if p == q:
        raise ValueError("points coincide")
    (a0, a1, a2), (b0, b1, b2) = p.coords, q.coords
    x, y, z = ring.gens()
    return x * (a1 * b2 - a2 * b1) - y * (a0 * b2 - a2 * b0) + z * (a0 * b1 - a1 * b0)
