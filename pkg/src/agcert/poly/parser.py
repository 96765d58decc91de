"""Text parser and printer for polynomial expressions.

Grammar (whitespace is insignificant)::

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := '-' factor | base ('^' uint)?
    base     := var | rational | generator | '(' expr ')'
    rational := int ('/' uint)?

Precedence is ``^`` > unary minus > ``*`` ``/`` > ``+`` ``-``.  Division is
only allowed by a nonzero constant.
"""

from __future__ import annotations

import re

from ..arith import NFElem, Rat

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class PolySyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


def _tokenize(text: str):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(0).strip() == "":
            pos = m.end()
            continue
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", m.group(1), start))
        elif m.group(2):
            toks.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", start)
            toks.append(("op", ch, start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text, ring, generator):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.generator = generator

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, ch):
        t = self.take()
        if t[0] != "op" or t[1] != ch:
            raise PolySyntaxError(f"expected {ch!r}", t[2])

    def parse(self):
        v = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise PolySyntaxError(f"unexpected token {t[1]!r}", t[2])
        return v

    def expr(self):
        v = self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                w = self.term()
                v = v + w if t[1] == "+" else v - w
            else:
                return v

    def term(self):
        v = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "*/":
                self.take()
                w = self.factor()
                if t[1] == "*":
                    v = v * w
                else:
                    if not w.is_constant() or not w:
                        raise PolySyntaxError("division by a non-constant or zero", t[2])
                    v = v / w.constant_coeff()
            else:
                return v

    def factor(self):
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.take()
            return -self.factor()
        b = self.base()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "int":
                raise PolySyntaxError("expected unsigned integer exponent", e[2])
            return b ** int(e[1])
        return b

    def base(self):
        t = self.take()
        kind, val, pos = t
        if kind == "int":
            nxt = self.peek()
            # rational literal int/uint binds tighter than term-level division
            if nxt[0] == "op" and nxt[1] == "/" and self.toks[self.i + 1][0] == "int":
                self.take()
                den = self.take()
                if int(den[1]) == 0:
                    raise PolySyntaxError("zero denominator", den[2])
                return self.ring.const(Rat(int(val), int(den[1])))
            return self.ring.const(Rat(int(val)))
        if kind == "name":
            if val in self.ring._index:
                return self.ring.var(val)
            if val == self.generator:
                if self.ring.field.degree == 1:
                    raise PolySyntaxError(f"generator {val!r} used over the rationals", pos)
                return self.ring.const(self.ring.field.gen())
            raise PolySyntaxError(f"unknown symbol {val!r}", pos)
        if kind == "op" and val == "(":
            v = self.expr()
            self.expect_op(")")
            return v
        if kind == "end":
            raise PolySyntaxError("unexpected end of input", pos)
        raise PolySyntaxError(f"unexpected token {val!r}", pos)


def parse_poly(text: str, ring, generator: str = "r"):
    """Parse ``text`` into a MultiPoly of ``ring``."""
    return _Parser(text, ring, generator).parse()


def parse_element(text: str, field, generator: str = "r"):
    """Parse a field element such as ``(1+2*r)/3``."""
    from .ring import PolyRing

    ring = PolyRing(field, ["_"], "lex")
    p = parse_poly(text, ring, generator)
    if not p.is_constant():
        raise PolySyntaxError("expected a constant", 0)
    return p.constant_coeff()


def parse_univariate_rational(text: str, var: str = "t") -> list:
    """Rational coefficient list (low to high) of a univariate expression."""
    from ..arith import QQ
    from .ring import PolyRing

    ring = PolyRing(QQ, [var], "lex")
    p = parse_poly(text, ring, generator="\0")
    deg = p.degree(var)
    out = [Rat(0)] * (deg + 1)
    for (e,), c in p.sorted_terms():
        out[e] = c
    return out


def format_coeff(c, generator: str = "r") -> str:
    """String for a coefficient, parenthesized when it is not a plain rational."""
    if isinstance(c, NFElem):
        if c.is_rational():
            return str(c.c[0])
        return "(" + c.to_str(generator) + ")"
    return str(c)


def _is_negative_rational(c) -> bool:
    if isinstance(c, NFElem):
        return c.is_rational() and c.c[0] < 0
    return c < 0


def print_poly(f, generator: str | None = None) -> str:
    """Canonical text form that ``parse_poly`` reads back to the same polynomial."""
    ring = f.ring
    if generator is None:
        generator = getattr(ring.field, "gen_name", "r")
    if not f.terms:
        return "0"
    parts = []
    for exps, c in f.sorted_terms():
        mono = "*".join(
            (v if e == 1 else f"{v}^{e}") for v, e in zip(ring.vars, exps) if e
        )
        neg = _is_negative_rational(c)
        mag = -c if neg else c
        cs = format_coeff(mag, generator)
        if mono:
            body = mono if cs == "1" else f"{cs}*{mono}"
        else:
            body = cs
        parts.append(("-" if neg else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out
