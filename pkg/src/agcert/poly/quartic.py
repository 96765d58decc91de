"""Binary quartics a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4 and the triple-root test."""

from __future__ import annotations

from dataclasses import dataclass

from .univariate import UPoly, upoly_gcd


@dataclass(frozen=True)
class BinaryQuartic:
    a: object
    b: object
    c: object
    d: object
    e: object

    def coeffs(self):
        return (self.a, self.b, self.c, self.d, self.e)

    def is_zero(self) -> bool:
        return not any(self.coeffs())


def invariants(q: BinaryQuartic):
    a, b, c, d, e = q.coeffs()
    I = 12 * a * e - 3 * b * d + c * c
    J = 27 * a * d * d + 27 * b * b * e - 27 * b * c * d + 8 * c * c * c
    return I, J


def has_triple_root(q: BinaryQuartic):
    """Return (flag, I, J) with flag = (I == 0 and J == 0)."""
    if q.is_zero():
        raise ValueError("zero binary form")
    I, J = invariants(q)
    return (not I and not J), I, J


def triple_root_by_gcd(q: BinaryQuartic, field) -> bool:
    """Independent test: some linear form divides q to order >= 3.

    Works in both affine charts: z = 1 covers roots (x:1), x = 1 covers
    the root (1:0), which shows up as a triple root at 0 in the second chart.
    """
    if q.is_zero():
        raise ValueError("zero binary form")
    a, b, c, d, e = q.coeffs()
    for coeffs in ((e, d, c, b, a), (a, b, c, d, e)):
        f = UPoly(field, coeffs)
        if f.degree < 3:
            continue
        g = upoly_gcd(upoly_gcd(f, f.deriv()), f.deriv().deriv())
        if g.degree >= 1:
            return True
    return False
