"""Finite matrix groups over number fields."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..arith import NumberField
from ..linalg import det, kernel


class GroupTooLarge(RuntimeError):
    def __init__(self, bound: int):
        super().__init__(f"closure exceeded {bound} elements")
        self.bound = bound


class NFMatrix:
    """Square matrix with number-field entries; hashable and immutable."""

    __slots__ = ("field", "rows", "_h")

    def __init__(self, field: NumberField, rows):
        self.field = field
        self.rows = tuple(tuple(field(x) for x in r) for r in rows)
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix is not square")
        self._h = hash(self.rows)

    @classmethod
    def identity(cls, field, n: int) -> "NFMatrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return isinstance(other, NFMatrix) and self.rows == other.rows

    def __hash__(self):
        return self._h

    def __matmul__(self, other: "NFMatrix") -> "NFMatrix":
        n = self.n
        z = self.field.zero
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = z
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return NFMatrix(self.field, out)

    __mul__ = __matmul__

    def det(self):
        return det([list(r) for r in self.rows], self.field.one)

    def trace(self):
        acc = self.field.zero
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def inverse(self) -> "NFMatrix":
        from ..linalg import inverse

        return NFMatrix(self.field, inverse([list(r) for r in self.rows], self.field.zero, self.field.one))

    def is_identity(self) -> bool:
        one, zero = self.field.one, self.field.zero
        return all(a == (one if i == j else zero) for i, r in enumerate(self.rows) for j, a in enumerate(r))

    def apply(self, v):
        return tuple(sum((a * b for a, b in zip(r, v)), self.field.zero) for r in self.rows)

    def __repr__(self):
        return f"NFMatrix({[[str(a) for a in r] for r in self.rows]})"


@dataclass
class MatGroup:
    generators: list
    elements: list

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def field(self):
        return self.elements[0].field

    def __contains__(self, m) -> bool:
        return m in set(self.elements)


def closure(gens, bound: int = 1000) -> MatGroup:
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    for g in gens:
        if not g.det():
            raise ValueError("singular generator")
    ident = NFMatrix.identity(gens[0].field, gens[0].n)
    seen = {ident}
    order = [ident]
    queue = deque([ident])
    while queue:
        h = queue.popleft()
        for g in gens:
            x = h @ g
            if x not in seen:
                seen.add(x)
                order.append(x)
                if len(order) > bound:
                    raise GroupTooLarge(bound)
                queue.append(x)
    return MatGroup(gens, order)


def element_order(m: NFMatrix, bound: int = 1000) -> int:
    p = m
    for k in range(1, bound + 1):
        if p.is_identity():
            return k
        p = p @ m
    raise GroupTooLarge(bound)


def presentation_semidihedral(G: MatGroup) -> bool:
    """|G| = 16 and some r, s with r^8 = s^2 = 1, s r s^-1 = r^3 generate G."""
    if G.order != 16:
        return False
    orders = {g: element_order(g, 16) for g in G.elements}
    rs = [g for g, k in orders.items() if k == 8]
    ss = [g for g, k in orders.items() if k == 2]
    for r in rs:
        r3 = r @ r @ r
        powers = set()
        p = r
        for _ in range(8):
            powers.add(p)
            p = p @ r
        for s in ss:
            if s in powers:
                continue
            if s @ r @ s.inverse() == r3:
                return True
    return False


def mirrors(G: MatGroup) -> list:
    """Fixed lines of the reflections of a 2x2 group, as normalized direction vectors."""
    out = []
    K = G.field
    for g in G.elements:
        if g.n != 2 or g.is_identity() or not (g @ g).is_identity():
            continue
        if g.det() != -K.one:
            continue
        rows = [[a - (K.one if i == j else K.zero) for j, a in enumerate(r)] for i, r in enumerate(g.rows)]
        ker = kernel(rows, 2, K.zero, K.one)
        if len(ker) != 1:
            continue
        v = ker[0]
        k = max(i for i, a in enumerate(v) if a)
        v = tuple(a / v[k] for a in v)
        if v not in out:
            out.append(v)
    return out


def line_equation(v) -> tuple:
    """Coefficients (a, b) of a x + b y = 0 for the line spanned by v."""
    return (v[1], -v[0])
