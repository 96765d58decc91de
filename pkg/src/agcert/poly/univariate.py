"""Dense univariate polynomials over a number field (coefficients low to high)."""

from __future__ import annotations

from typing import Sequence

from ..arith import QQ, NumberField


class UPoly:
    __slots__ = ("field", "c")

    def __init__(self, field: NumberField, coeffs: Sequence):
        self.field = field
        c = [field(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = c

    @classmethod
    def _raw(cls, field, c):
        obj = cls.__new__(cls)
        obj.field = field
        while c and not c[-1]:
            c.pop()
        obj.c = c
        return obj

    # --- queries -----------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def __bool__(self):
        return bool(self.c)

    def lc(self):
        return self.c[-1]

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.c))

    def __call__(self, x):
        acc = self.field.zero
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def __repr__(self):
        return f"UPoly({self.to_str()})"

    def to_str(self, var: str = "x") -> str:
        from .parser import format_coeff

        if not self.c:
            return "0"
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            a = self.c[k]
            if not a:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            cs = format_coeff(a, self.field.gen_name)
            if mono:
                parts.append(mono if cs == "1" else f"{cs}*{mono}")
            else:
                parts.append(cs)
        return "+".join(parts).replace("+-", "-")

    # --- arithmetic -------------------------------------------------------
    def __add__(self, o):
        o = self._co(o)
        n = max(len(self.c), len(o.c))
        z = self.field.zero
        return UPoly._raw(self.field, [(self.c[i] if i < len(self.c) else z) + (o.c[i] if i < len(o.c) else z) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly._raw(self.field, [-a for a in self.c])

    def __sub__(self, o):
        return self + (-self._co(o))

    def __rsub__(self, o):
        return self._co(o) - self

    def __mul__(self, o):
        o = self._co(o)
        if not self.c or not o.c:
            return UPoly._raw(self.field, [])
        out = [self.field.zero] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return UPoly._raw(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = UPoly(self.field, [1])
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def _co(self, o):
        if isinstance(o, UPoly):
            if o.field != self.field:
                raise ValueError("field mismatch")
            return o
        return UPoly(self.field, [o])

    def divmod(self, g: "UPoly"):
        if not g.c:
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.c)
        dg = g.degree
        inv = 1 / g.lc()
        q = [self.field.zero] * max(len(r) - dg, 1)
        while len(r) - 1 >= dg and r:
            k = len(r) - 1 - dg
            coef = r[-1] * inv
            q[k] = coef
            if coef:
                for i, b in enumerate(g.c):
                    r[i + k] = r[i + k] - coef * b
            r.pop()
            while r and not r[-1]:
                r.pop()
        return UPoly._raw(self.field, q), UPoly._raw(self.field, r)

    def __floordiv__(self, g):
        return self.divmod(g)[0]

    def __mod__(self, g):
        return self.divmod(g)[1]

    def exact_div(self, g: "UPoly") -> "UPoly":
        q, r = self.divmod(g)
        if r:
            raise ArithmeticError("univariate division is not exact")
        return q

    def monic(self) -> "UPoly":
        if not self.c:
            return self
        inv = 1 / self.lc()
        return UPoly._raw(self.field, [a * inv for a in self.c])

    def deriv(self) -> "UPoly":
        return UPoly._raw(self.field, [a * i for i, a in enumerate(self.c)][1:])

    def compose(self, g: "UPoly") -> "UPoly":
        acc = UPoly(self.field, [])
        for a in reversed(self.c):
            acc = acc * g + a
        return acc

    def shift(self, a) -> "UPoly":
        """p(x + a)."""
        return self.compose(UPoly(self.field, [a, 1]))

    def root_multiplicity(self, a) -> int:
        """Order of vanishing of ``self`` at ``a``."""
        if not self.c:
            raise ValueError("zero polynomial")
        lin = UPoly(self.field, [-a, 1])
        k = 0
        p = self
        while True:
            q, r = p.divmod(lin)
            if r:
                return k
            k += 1
            p = q


def upoly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd via Euclid (zero if both are zero)."""
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def gcd_uni(f: UPoly, g: UPoly) -> UPoly:
    return upoly_gcd(f, g)


def squarefree_part(f: UPoly) -> UPoly:
    if f.degree <= 0:
        return f.monic()
    g = upoly_gcd(f, f.deriv())
    return f.exact_div(g).monic()


def squarefree_decomposition(f: UPoly) -> list:
    """Yun's algorithm: list of (factor, multiplicity) with squarefree, coprime factors."""
    out = []
    if f.degree <= 0:
        return out
    f = f.monic()
    fp = f.deriv()
    a = upoly_gcd(f, fp)
    b = f.exact_div(a)
    c = fp.exact_div(a)
    d = c - b.deriv()
    i = 1
    while b.degree > 0:
        a = upoly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.deriv()
        i += 1
    return out


def upoly_from_multipoly(f, var: str | None = None) -> UPoly:
    """Univariate view of a MultiPoly that involves at most one variable."""
    ring = f.ring
    used = f.variables()
    if var is None:
        if len(used) > 1:
            raise ValueError("polynomial is not univariate")
        var = next(iter(used)) if used else ring.vars[0]
    elif used - {var}:
        raise ValueError(f"polynomial involves variables other than {var!r}")
    i = ring.index(var)
    deg = max((ring.decode(k)[i] for k in f.terms), default=-1)
    c = [ring.field.zero] * (deg + 1)
    for k, v in f.terms.items():
        c[ring.decode(k)[i]] = v
    return UPoly._raw(ring.field, c)


def upoly_to_multipoly(p: UPoly, ring, var: str):
    i = ring.index(var)
    terms = []
    for k, a in enumerate(p.c):
        if a:
            e = [0] * ring.nvars
            e[i] = k
            terms.append((e, a))
    return ring.from_terms(terms)


def rational_upoly(coeffs) -> UPoly:
    return UPoly(QQ, coeffs)
