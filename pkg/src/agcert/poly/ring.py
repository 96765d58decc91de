"""Sparse multivariate polynomials with packed-integer monomials.

Every monomial is encoded as one Python int.  The high part holds one
field per *order row* (a nonnegative linear form in the exponents), the
low part holds the raw exponents with one guard bit per field.  The
encoding is additive, so monomial multiplication is integer addition and
comparing keys compares monomials in the ring's order.  Divisibility is a
guard-bit test on the low part.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .. import _kernels as K
from ..arith import QQ, NFElem, NumberField, Rat

FIELD_BITS = 20          # bits per raw exponent field, top bit is the guard
ROW_BITS = 24            # bits per order row
MAX_EXP = (1 << (FIELD_BITS - 1)) - 1


class RingMismatch(ValueError):
    pass


class MonomialOrder:
    """lex, grevlex, or block(k): grevlex on the first k variables, then grevlex on the rest."""

    def __init__(self, kind: str = "grevlex", split: int | None = None):
        if kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and (split is None or split < 1):
            raise ValueError("block order needs a split index >= 1")
        self.kind = kind
        self.split = split

    def rows(self, n: int) -> list[list[int]]:
        if self.kind == "lex":
            return []
        if self.kind == "grevlex":
            blocks = [list(range(n))]
        else:
            k = min(self.split, n)
            blocks = [list(range(k)), list(range(k, n))]
        rows = []
        for b in blocks:
            m = len(b)
            for k in range(m):
                rows.append(b[: m - k])
        return [r for r in rows if r]

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.split) == (other.kind, other.split)

    def __hash__(self):
        return hash((self.kind, self.split))

    def __repr__(self):
        return f"block({self.split})" if self.kind == "block" else self.kind


def _as_order(order) -> MonomialOrder:
    if isinstance(order, MonomialOrder):
        return order
    if isinstance(order, str):
        if order.startswith("block"):
            return MonomialOrder("block", int(order[order.index("(") + 1 : order.index(")")]))
        return MonomialOrder(order)
    raise TypeError(order)


class PolyRing:
    """Polynomial ring field[vars] with a fixed monomial order."""

    def __init__(self, field: NumberField, variables: Sequence[str], order="grevlex"):
        self.field = field
        self.vars = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names")
        self.nvars = n = len(self.vars)
        self.order = _as_order(order)
        rows = self.order.rows(n)
        self._rows = rows
        raw_bits = FIELD_BITS * n
        nrows = len(rows)
        weights = []
        for i in range(n):
            w = 1 << (FIELD_BITS * (n - 1 - i))
            for j, r in enumerate(rows):
                if i in r:
                    w += 1 << (raw_bits + ROW_BITS * (nrows - 1 - j))
            weights.append(w)
        self._weights = tuple(weights)
        self.low_mask = (1 << raw_bits) - 1
        g = 0
        for i in range(n):
            g |= 1 << (FIELD_BITS * i + FIELD_BITS - 1)
        self.guard = g
        self._field_mask = (1 << FIELD_BITS) - 1
        self._index = {v: i for i, v in enumerate(self.vars)}
        self.zero_coeff = field.zero
        self.one_coeff = field.one
        self._hash = hash((field, self.vars, self.order))

    # --- identity -----------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.vars == other.vars
            and self.order == other.order
            and self.field == other.field
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PolyRing({self.field!r}, {self.vars}, {self.order!r})"

    def with_order(self, order) -> "PolyRing":
        return PolyRing(self.field, self.vars, order)

    def with_vars(self, variables: Sequence[str], order=None) -> "PolyRing":
        return PolyRing(self.field, variables, order or self.order)

    def index(self, var: str) -> int:
        try:
            return self._index[var]
        except KeyError:
            raise KeyError(f"unknown variable {var!r}") from None

    # --- monomial encoding -------------------------------------------
    def encode(self, exps: Sequence[int]) -> int:
        k = 0
        for e, w in zip(exps, self._weights):
            if e:
                if e < 0 or e > MAX_EXP:
                    raise OverflowError(f"exponent {e} out of range")
                k += e * w
        return k

    def decode(self, key: int) -> tuple:
        n = self.nvars
        m = self._field_mask
        return tuple((key >> (FIELD_BITS * (n - 1 - i))) & m for i in range(n))

    def key_degree(self, key: int) -> int:
        return sum(self.decode(key))

    # --- coefficient coercion ----------------------------------------
    def coerce_coeff(self, c):
        if isinstance(c, NFElem):
            if self.field.degree == 1 or c.field != self.field:
                if c.is_rational():
                    return self.field(c.c[0])
                raise RingMismatch("coefficient from another field")
            return c
        return self.field(c)

    # --- constructors --------------------------------------------------
    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return MultiPoly(self, {0: self.one_coeff})

    def const(self, c) -> "MultiPoly":
        c = self.coerce_coeff(c)
        return MultiPoly(self, {0: c} if c else {})

    def var(self, name: str) -> "MultiPoly":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return MultiPoly(self, {self.encode(e): self.one_coeff})

    def gens(self) -> tuple:
        return tuple(self.var(v) for v in self.vars)

    def monomial(self, exps: Sequence[int], coeff=1) -> "MultiPoly":
        c = self.coerce_coeff(coeff)
        return MultiPoly(self, {self.encode(exps): c} if c else {})

    def from_terms(self, terms: Iterable) -> "MultiPoly":
        """Build from (exponent tuple, coefficient) pairs; repeated monomials add up."""
        d = {}
        for e, c in terms:
            k = self.encode(e)
            c = self.coerce_coeff(c)
            if k in d:
                d[k] = d[k] + c
            else:
                d[k] = c
        return MultiPoly(self, {k: v for k, v in d.items() if v})

    def convert(self, f: "MultiPoly") -> "MultiPoly":
        """Map ``f`` into this ring by variable name (missing variables must not occur)."""
        if f.ring == self:
            return f
        idx = []
        for v in f.ring.vars:
            idx.append(self._index.get(v))
        d = {}
        n = self.nvars
        for k, c in f.terms.items():
            e = f.ring.decode(k)
            ne = [0] * n
            for i, x in enumerate(e):
                if x:
                    j = idx[i]
                    if j is None:
                        raise RingMismatch(f"variable {f.ring.vars[i]!r} not in target ring")
                    ne[j] = x
            d[self.encode(ne)] = self.coerce_coeff(c)
        return MultiPoly(self, d)

    def parse(self, text: str, generator: str = "r") -> "MultiPoly":
        from .parser import parse_poly

        return parse_poly(text, self, generator=generator)


class MultiPoly:
    """Immutable sparse polynomial: ``terms`` maps packed keys to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None

    # --- basic queries -------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_coeff(self):
        return self.terms.get(0, self.ring.zero_coeff)

    def lead_key(self) -> int:
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = max(self.terms)
        return self._lead

    def lead_coeff(self):
        return self.terms[self.lead_key()]

    def lead_exps(self) -> tuple:
        return self.ring.decode(self.lead_key())

    def sorted_terms(self) -> list:
        """(exps, coeff) pairs, descending in the ring order."""
        dec = self.ring.decode
        return [(dec(k), self.terms[k]) for k in sorted(self.terms, reverse=True)]

    def monomials(self) -> list:
        return [e for e, _ in self.sorted_terms()]

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(self.ring.encode(exps), self.ring.zero_coeff)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(self.ring.decode(k)) for k in self.terms)

    def degree(self, var: str) -> int:
        if not self.terms:
            return -1
        i = self.ring.index(var)
        return max(self.ring.decode(k)[i] for k in self.terms)

    def variables(self) -> set:
        used = set()
        for k in self.terms:
            for i, e in enumerate(self.ring.decode(k)):
                if e:
                    used.add(self.ring.vars[i])
        return used

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        return self.weighted_degrees(weights) <= 1

    def weighted_degrees(self, weights: Sequence[int] | None = None) -> int:
        """Number of distinct (weighted) degrees among the terms."""
        w = weights or [1] * self.ring.nvars
        degs = {sum(a * b for a, b in zip(self.ring.decode(k), w)) for k in self.terms}
        return len(degs)

    def weighted_degree(self, weights: Sequence[int]) -> int:
        if not self.terms:
            return -1
        return max(sum(a * b for a, b in zip(self.ring.decode(k), weights)) for k in self.terms)

    # --- comparison ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                return False
            return self.terms == other.terms
        try:
            c = self.ring.coerce_coeff(other)
        except (TypeError, ValueError, RingMismatch):
            return NotImplemented
        return self.terms == ({0: c} if c else {})

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # --- arithmetic ----------------------------------------------------
    def _other(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch("polynomials live in different rings")
            return other
        try:
            return self.ring.const(other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if len(o.terms) > len(self.terms):
            a, b = o.terms, self.terms
        else:
            a, b = self.terms, o.terms
        d = dict(a)
        for k, c in b.items():
            v = d.get(k)
            if v is None:
                d[k] = c
            else:
                v = v + c
                if v:
                    d[k] = v
                else:
                    del d[k]
        return MultiPoly(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        d = dict(self.terms)
        for k, c in o.terms.items():
            v = d.get(k)
            if v is None:
                d[k] = -c
            else:
                v = v - c
                if v:
                    d[k] = v
                else:
                    del d[k]
        return MultiPoly(self.ring, d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch("polynomials live in different rings")
            if not self.terms or not other.terms:
                return MultiPoly(self.ring, {})
            if len(other.terms) == 1:
                (k, c), = other.terms.items()
                return self.mul_term(k, c)
            if len(self.terms) == 1:
                (k, c), = self.terms.items()
                return other.mul_term(k, c)
            return MultiPoly(self.ring, K.poly_mul(self.terms, other.terms))
        try:
            c = self.ring.coerce_coeff(other)
        except (TypeError, ValueError):
            return NotImplemented
        if not c:
            return MultiPoly(self.ring, {})
        return MultiPoly(self.ring, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def mul_term(self, key: int, coeff) -> "MultiPoly":
        if not coeff:
            return MultiPoly(self.ring, {})
        return MultiPoly(self.ring, K.poly_mul_term(self.terms, key, coeff))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        """Division by a nonzero scalar, or exact division by a polynomial."""
        if isinstance(other, MultiPoly):
            q, r = self.divmod_single(other)
            if r:
                raise ArithmeticError("polynomial division is not exact")
            return q
        c = self.ring.coerce_coeff(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        inv = 1 / c
        return MultiPoly(self.ring, {k: v * inv for k, v in self.terms.items()})

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        lc = self.lead_coeff()
        if lc == 1:
            return self
        inv = 1 / lc
        return MultiPoly(self.ring, {k: v * inv for k, v in self.terms.items()})

    def divmod_single(self, g: "MultiPoly"):
        """Multivariate division of self by one polynomial (quotient, remainder)."""
        if not g:
            raise ZeroDivisionError("division by zero polynomial")
        ring = self.ring
        glk = g.lead_key()
        gll = glk & ring.low_mask
        ginv = 1 / g.lead_coeff()
        tail = [(k, c * ginv) for k, c in g.terms.items() if k != glk]
        q = {}
        r = {}
        f = dict(self.terms)
        guard = ring.guard
        low_mask = ring.low_mask
        import heapq

        heap = [-k for k in f]
        heapq.heapify(heap)
        while heap:
            k = -heapq.heappop(heap)
            c = f.pop(k)
            if not c:
                continue
            if (((k & low_mask) + guard) - gll) & guard == guard:
                qk = k - glk
                qc = c * ginv
                q[qk] = qc
                for tk, tc in tail:
                    nk = qk + tk
                    v = f.get(nk)
                    if v is None:
                        f[nk] = -(c * tc)
                        heapq.heappush(heap, -nk)
                    else:
                        f[nk] = v - c * tc
            else:
                r[k] = c
        return MultiPoly(ring, q), MultiPoly(ring, r)

    def exact_div(self, g: "MultiPoly") -> "MultiPoly":
        q, r = self.divmod_single(g)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    # --- calculus and substitution ------------------------------------
    def diff(self, var: str) -> "MultiPoly":
        ring = self.ring
        i = ring.index(var)
        w = ring._weights[i]
        d = {}
        for k, c in self.terms.items():
            e = ring.decode(k)[i]
            if e:
                d[k - w] = c * e
        return MultiPoly(ring, d)

    def jacobian(self) -> list:
        return [self.diff(v) for v in self.ring.vars]

    def evaluate(self, point: Mapping | Sequence):
        """Value at a full point (sequence in variable order or name->value map)."""
        ring = self.ring
        if isinstance(point, Mapping):
            vals = [point[v] for v in ring.vars]
        else:
            vals = list(point)
        if len(vals) != ring.nvars:
            raise ValueError("point has wrong dimension")
        powers = [dict() for _ in vals]
        acc = ring.zero_coeff
        for k, c in self.terms.items():
            term = c
            for i, e in enumerate(ring.decode(k)):
                if e:
                    p = powers[i].get(e)
                    if p is None:
                        p = vals[i] ** e
                        powers[i][e] = p
                    term = term * p
            acc = acc + term
        return acc

    def substitute(self, assignments: Mapping, target: PolyRing | None = None) -> "MultiPoly":
        """Simultaneous substitution of variables by polynomials or scalars."""
        ring = self.ring
        for v in assignments:
            ring.index(v)
        if target is None:
            target = ring
            for val in assignments.values():
                if isinstance(val, MultiPoly):
                    target = val.ring
                    break
        images = []
        for v in ring.vars:
            if v in assignments:
                val = assignments[v]
                if isinstance(val, MultiPoly):
                    images.append(target.convert(val))
                else:
                    images.append(target.const(val))
            else:
                images.append(target.var(v))
        cache = [dict() for _ in images]
        out = {}
        for k, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(ring.decode(k)):
                if e:
                    p = cache[i].get(e)
                    if p is None:
                        p = images[i] ** e
                        cache[i][e] = p
                    term = term * p
            for tk, tc in term.terms.items():
                v = out.get(tk)
                out[tk] = tc if v is None else v + tc
        return MultiPoly(target, {k: v for k, v in out.items() if v})

    def homogeneous_part(self, degree: int) -> "MultiPoly":
        dec = self.ring.decode
        return MultiPoly(self.ring, {k: c for k, c in self.terms.items() if sum(dec(k)) == degree})

    def map_coeffs(self, fn, ring: PolyRing | None = None) -> "MultiPoly":
        """Apply ``fn`` to every coefficient, optionally landing in a ring with the same variables."""
        ring = ring or self.ring
        same = ring.vars == self.ring.vars and ring.order == self.ring.order
        d = {}
        for k, c in self.terms.items():
            v = fn(c)
            if v:
                d[k if same else ring.encode(self.ring.decode(k))] = v
        return MultiPoly(ring, d)

    # --- display -------------------------------------------------------
    def __str__(self):
        from .parser import print_poly

        return print_poly(self)

    def __repr__(self):
        return f"MultiPoly({self})"


def make_ring(variables: str | Sequence[str], field: NumberField = QQ, order="grevlex") -> PolyRing:
    if isinstance(variables, str):
        variables = [v.strip() for v in variables.replace(",", " ").split()]
    return PolyRing(field, variables, order)


def poly_arith(f: MultiPoly, g: MultiPoly, op: str, n: int | None = None) -> MultiPoly:
    """Exact arithmetic; ``op`` is add, sub, mul or pow (with exponent ``n``)."""
    if op == "pow":
        return f ** (n if n is not None else g)
    if isinstance(g, MultiPoly) and g.ring != f.ring:
        raise RingMismatch("polynomials live in different rings")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")

