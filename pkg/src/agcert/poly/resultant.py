"""Sylvester resultants, computed fraction-free with Bareiss elimination."""

from __future__ import annotations

from ..linalg import bareiss_det
from .ring import MultiPoly
from .univariate import UPoly


def _coeffs_in(f: MultiPoly, var: str) -> list:
    """Coefficients of f as a polynomial in ``var`` (low to high), each a MultiPoly."""
    ring = f.ring
    i = ring.index(var)
    w = ring._weights[i]
    deg = f.degree(var)
    buckets = [dict() for _ in range(deg + 1)]
    for k, c in f.terms.items():
        e = ring.decode(k)[i]
        buckets[e][k - e * w] = c
    return [MultiPoly(ring, b) for b in buckets]


def sylvester_matrix(a: list, b: list, zero):
    """Sylvester matrix of coefficient lists given high to low."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(a) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(b) + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Res_var(f, g) as a polynomial in the remaining variables (same ring)."""
    if f.ring != g.ring:
        raise ValueError("ring mismatch")
    df, dg = f.degree(var), g.degree(var)
    if df <= 0 and dg <= 0:
        raise ValueError(f"both polynomials are constant in {var!r}")
    if not f or not g:
        return f.ring.zero()
    if df == 0:
        return f ** dg
    if dg == 0:
        return g ** df
    a = list(reversed(_coeffs_in(f, var)))
    b = list(reversed(_coeffs_in(g, var)))
    M = sylvester_matrix(a, b, f.ring.zero())
    return bareiss_det(M, lambda x, y: x.exact_div(y))


def resultant_uni(f: UPoly, g: UPoly):
    """Resultant of two univariate polynomials over a field."""
    if not f or not g:
        return f.field.zero
    if f.degree == 0:
        return f.c[0] ** g.degree
    if g.degree == 0:
        return g.c[0] ** f.degree
    M = sylvester_matrix(list(reversed(f.c)), list(reversed(g.c)), f.field.zero)
    return bareiss_det(M, lambda x, y: x / y)


def discriminant_uni(f: UPoly):
    n = f.degree
    r = resultant_uni(f, f.deriv())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r / f.lc()
