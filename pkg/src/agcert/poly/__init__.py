"""Polynomial arithmetic, parsing, resultants, univariate tools and root finding."""

from .parser import PolySyntaxError, parse_poly, print_poly
from .ring import MonomialOrder, MultiPoly, PolyRing, RingMismatch, make_ring, poly_arith

__all__ = [
    "MonomialOrder",
    "MultiPoly",
    "PolyRing",
    "PolySyntaxError",
    "RingMismatch",
    "make_ring",
    "parse_poly",
    "poly_arith",
    "print_poly",
]
