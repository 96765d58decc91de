"""Automorphisms of the genus 2 curve y^2 = x^5 - x over Q(zeta_8).

Functions on the curve are a + b*y with a, b in K(x), reduced with
y^2 = f(x).  A map is given by the images of x and y.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..arith import NumberField
from ..poly.roots import split_off_roots
from ..poly.univariate import UPoly, upoly_gcd

ORDER_BOUND = 48


def cyclotomic8() -> NumberField:
    return NumberField([1, 0, 0, 0, 1], gen="z")


class RatFun:
    """Element of K(x) as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UPoly, den: UPoly | None = None):
        K = num.field
        if den is None:
            den = UPoly(K, [1])
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = upoly_gcd(num, den) if num else den
        if g.degree > 0:
            num, den = num // g, den // g
        elif not num:
            den = UPoly(K, [1])
        lc = den.lc()
        self.num = num * UPoly(K, [1 / lc])
        self.den = den * UPoly(K, [1 / lc])

    @property
    def field(self):
        return self.num.field

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, o):
        return self.num == o.num and self.den == o.den

    def __add__(self, o):
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        return RatFun(self.num * o.num, self.den * o.den)

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RatFun(self.den, self.num)

    def __repr__(self):
        return f"({self.num.to_str()})/({self.den.to_str()})"


class CurveFunction:
    """a + b*y on the curve y^2 = f(x)."""

    __slots__ = ("a", "b", "f")

    def __init__(self, a: RatFun, b: RatFun, f: UPoly):
        self.a, self.b, self.f = a, b, f

    @classmethod
    def const(cls, c, f: UPoly):
        K = f.field
        return cls(RatFun(UPoly(K, [c])), RatFun(UPoly(K, [])), f)

    def __add__(self, o):
        return CurveFunction(self.a + o.a, self.b + o.b, self.f)

    def __sub__(self, o):
        return CurveFunction(self.a - o.a, self.b - o.b, self.f)

    def __mul__(self, o):
        F = RatFun(self.f)
        return CurveFunction(self.a * o.a + self.b * o.b * F, self.a * o.b + self.b * o.a, self.f)

    def inverse(self):
        F = RatFun(self.f)
        norm = self.a * self.a - self.b * self.b * F
        ninv = norm.inverse()
        return CurveFunction(self.a * ninv, -self.b * ninv, self.f)

    def __eq__(self, o):
        return self.a == o.a and self.b == o.b

    def __bool__(self):
        return bool(self.a) or bool(self.b)


def _eval_ratfun(r: RatFun, t: CurveFunction) -> CurveFunction:
    return _eval_poly(r.num, t) * _eval_poly(r.den, t).inverse()


def _eval_poly(p: UPoly, t: CurveFunction) -> CurveFunction:
    acc = CurveFunction.const(0, t.f)
    for c in reversed(p.c):
        acc = acc * t + CurveFunction.const(c, t.f)
    return acc


@dataclass
class CurveAutomorphism:
    """(x, y) -> (X, Y) with X, Y functions on the curve."""

    X: CurveFunction
    Y: CurveFunction

    @property
    def f(self) -> UPoly:
        return self.X.f

    def apply(self, h: CurveFunction) -> CurveFunction:
        """h composed with the map."""
        return _eval_ratfun(h.a, self.X) + _eval_ratfun(h.b, self.X) * self.Y

    def __matmul__(self, other: "CurveAutomorphism") -> "CurveAutomorphism":
        """self after other."""
        return CurveAutomorphism(other.apply(self.X), other.apply(self.Y))

    def is_identity(self) -> bool:
        return self.X == coordinate_x(self.f) and self.Y == coordinate_y(self.f)


def coordinate_x(f: UPoly) -> CurveFunction:
    K = f.field
    return CurveFunction(RatFun(UPoly(K, [0, 1])), RatFun(UPoly(K, [])), f)


def coordinate_y(f: UPoly) -> CurveFunction:
    K = f.field
    return CurveFunction(RatFun(UPoly(K, [])), RatFun(UPoly(K, [1])), f)


def mobius_map(a, b, c, d, scale, power: int, f: UPoly) -> CurveAutomorphism:
    """x -> (a x + b)/(c x + d), y -> scale * y / (c x + d)^power."""
    K = f.field
    X = CurveFunction(RatFun(UPoly(K, [b, a]), UPoly(K, [d, c])), RatFun(UPoly(K, [])), f)
    den = UPoly(K, [d, c]) ** power
    Y = CurveFunction(RatFun(UPoly(K, [])), RatFun(UPoly(K, [scale]), den), f)
    return CurveAutomorphism(X, Y)


def preserves_curve(m: CurveAutomorphism) -> bool:
    """Y^2 - f(X) reduces to zero modulo y^2 - f(x)."""
    lhs = m.Y * m.Y
    rhs = _eval_poly(m.f, m.X)
    return lhs == rhs


def automorphism_order(m: CurveAutomorphism, bound: int = ORDER_BOUND):
    p = m
    for k in range(1, bound + 1):
        if p.is_identity():
            return k
        p = p @ m
    return None


@dataclass
class FixedLocus:
    x_roots: list  # fixed x-values in the field
    residual: list  # irreducible-over-K factors of the fixed-point polynomial
    infinity: bool
    polynomial: UPoly | None


def fixed_x(m: CurveAutomorphism) -> FixedLocus:
    f = m.f
    K = f.field
    X = m.X
    if X.b:
        raise ValueError("x-part depends on y")
    if X.a == coordinate_x(f).a:
        # x is fixed pointwise; fixed points need y' = y, i.e. y = 0 unless the y-part is trivial
        if m.Y == coordinate_y(f):
            raise ValueError("identity map")
        rm, rest = split_off_roots(f)
        return FixedLocus([r for r, _ in rm], [rest] if rest.degree > 0 else [], f.degree % 2 == 1, f)
    num, den = X.a.num, X.a.den
    P = num - den * UPoly(K, [0, 1])
    rm, rest = split_off_roots(P)
    at_inf = P.degree < max(num.degree, den.degree + 1)
    return FixedLocus([r for r, _ in rm], [rest] if rest.degree > 0 else [], at_inf, P)


@dataclass
class BolzaReport:
    preserves: bool
    order: int | None
    fixed: FixedLocus


def bolza_check(m: CurveAutomorphism, bound: int = ORDER_BOUND) -> BolzaReport:
    return BolzaReport(preserves_curve(m), automorphism_order(m, bound), fixed_x(m))


def y_scale_defect(m: CurveAutomorphism):
    """The constant c with Y^2 = c * f(X), or None if the ratio is not constant."""
    lhs = m.Y * m.Y
    rhs = _eval_poly(m.f, m.X)
    if not rhs:
        return None
    q = lhs * rhs.inverse()
    if q.b or q.a.num.degree > 0 or q.a.den.degree > 0:
        return None
    return q.a.num.c[0] if q.a.num else m.f.field.zero


def rescaled(m: CurveAutomorphism, lam) -> CurveAutomorphism:
    K = m.f.field
    s = CurveFunction.const(lam, m.f)
    return CurveAutomorphism(m.X, m.Y * s)


def corrected_y_scale(m: CurveAutomorphism, order: int | None = None, bound: int = ORDER_BOUND):
    """Rescale y by the square root of 1/c that turns the map into an automorphism.

    Of the two square roots, the one realising ``order`` is chosen when given.
    Returns (map, scalar) or None when c is not a square in the field.
    """
    from ..arith import nf_sqrt

    c = y_scale_defect(m)
    if not c:
        return None
    lam = nf_sqrt(1 / c, m.f.field)
    if lam is None:
        return None
    for cand in (lam, -lam):
        mm = rescaled(m, cand)
        if order is None or automorphism_order(mm, bound) == order:
            return mm, cand
    return None


# --- the three maps --------------------------------------------------------------------------


def bolza_setup():
    K = cyclotomic8()
    z = K.gen()
    i = z * z
    sqrt2 = z - z**3
    f = UPoly(K, [0, -1, 0, 0, 0, 1])
    return K, i, sqrt2, f


def map_v():
    K, i, s2, f = bolza_setup()
    # x -> -(x + i)/(i x + 1), y -> sqrt2 (i - 1) y / (i x + 1)^3
    return mobius_map(-K.one, -i, i, K.one, s2 * (i - 1), 3, f)


def map_w():
    K, i, s2, f = bolza_setup()
    return mobius_map(1 + i, -(1 + i), 1 - i, 1 - i, -K.one, 3, f)


def map_hyperelliptic():
    K, i, s2, f = bolza_setup()
    return mobius_map(K.one, K.zero, K.zero, K.one, -K.one, 0, f)


def torsion_x_polynomials():
    K, i, s2, f = bolza_setup()
    return {
        "x^4-4ix^2-1": UPoly(K, [-1, 0, -4 * i, 0, 1]),
        "x^4+4ix^2-1": UPoly(K, [-1, 0, 4 * i, 0, 1]),
        "x^5-x": f,
    }
