"""Singularity census of a curve in the weighted plane P(1,3,8)."""

from __future__ import annotations

from ..curves.local import classify_local, poly_to_dict
from ..ideals import Budget, Ideal, solve_zero_dim
from ..poly.ring import MultiPoly, PolyRing
from ..poly.univariate import upoly_from_multipoly, upoly_gcd


class CensusIncomplete(RuntimeError):
    """Some singular points need a larger field than the coefficient field."""


def mirror_census(f: MultiPoly, budget: Budget | None = None) -> list:
    """Sorted ADE labels of the singular points of f = 0 in P(1,3,8).

    Points with x != 0 live in the smooth chart x = 1.  On x = 0 the curve
    reduces to c*y^8 + e*z^3, and it is smooth there when that binary part
    has no repeated root and avoids both orbifold points of the plane.
    """
    ring = f.ring
    x, y, z = ring.vars
    K = ring.field
    edge = upoly_from_multipoly(f.substitute({x: 0, y: 1}), z)
    if edge.degree != 3 or not edge.c[0] or upoly_gcd(edge, edge.deriv()).degree > 0:
        raise CensusIncomplete("curve is not smooth along x = 0")
    A = PolyRing(K, [y, z], "grevlex")
    g = A.convert(f.substitute({x: 1}))
    sol = solve_zero_dim(Ideal(A, [g, g.diff(y), g.diff(z)]), budget=budget)
    if sol.residual:
        raise CensusIncomplete("singular points outside the coefficient field")
    labels = []
    for a, b in sol.points:
        local = g.substitute({y: A.var(y) + a, z: A.var(z) + b})
        labels.append(classify_local(poly_to_dict(local))[2])
    return sorted(labels)
