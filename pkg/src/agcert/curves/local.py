"""Local invariants of plane curves at a point.

Everything is computed in the affine chart where the point's normalized
coordinate equals 1, after translating the point to the origin.  Bivariate
local polynomials are plain dicts {(i, j): coeff}, which keeps Fulton's
recursion cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..poly.ring import MultiPoly, PolyRing
from .points import ProjPoint

INFINITE = float("inf")
_FULTON_STEP_CAP = 200_000
_GCD_CHECK_AFTER = 64


class NotOnCurve(ValueError):
    pass


class SmoothPoint(ValueError):
    pass


# --- charts --------------------------------------------------------------------


def chart_indices(p: ProjPoint):
    j = p.chart()
    return j, [i for i in range(3) if i != j]


def local_dict(f: MultiPoly, p: ProjPoint) -> dict:
    """f in the affine chart of p, translated so that p sits at (0, 0)."""
    ring = f.ring
    j, (i1, i2) = chart_indices(p)
    a, b = p.coords[i1], p.coords[i2]
    out: dict = {}
    shifts_a = _binomial_shift(a)
    shifts_b = _binomial_shift(b)
    for k, c in f.terms.items():
        e = ring.decode(k)
        for (da, ca) in shifts_a(e[i1]):
            for (db, cb) in shifts_b(e[i2]):
                v = c * ca * cb
                if v:
                    key = (da, db)
                    w = out.get(key)
                    out[key] = v if w is None else w + v
    return {k: v for k, v in out.items() if v}


def _binomial_shift(a):
    """(X + a)^n expanded, as a function n -> [(power, coeff)]."""
    cache: dict = {}

    def expand(n):
        r = cache.get(n)
        if r is None:
            r = []
            binom = 1
            for i in range(n + 1):
                # term X^(n-i) a^i
                c = binom * a**i if i else 1
                if c:
                    r.append((n - i, c))
                binom = binom * (n - i) // (i + 1)
            cache[n] = r
        return r

    return expand


def local_ring(field) -> PolyRing:
    return PolyRing(field, ["u", "v"], "grevlex")


def dict_to_poly(d: dict, ring: PolyRing) -> MultiPoly:
    return ring.from_terms(((i, j), c) for (i, j), c in d.items())


def poly_to_dict(f: MultiPoly) -> dict:
    dec = f.ring.decode
    return {tuple(dec(k)): c for k, c in f.terms.items()}


def order_of(d: dict) -> int:
    return min((i + j for i, j in d), default=-1)


def jet(d: dict, n: int) -> dict:
    return {k: v for k, v in d.items() if sum(k) == n}


# --- multiplicity and tangent cone -------------------------------------------------


def multiplicity_at(f: MultiPoly, p: ProjPoint) -> int:
    d = local_dict(f, p)
    if not d:
        raise ValueError("zero polynomial")
    m = order_of(d)
    if m == 0:
        raise NotOnCurve(f"{p} is not on the curve")
    return m


def tangent_cone(f: MultiPoly, p: ProjPoint) -> MultiPoly:
    """Lowest jet at p, written back as a form in the projective coordinates."""
    m = multiplicity_at(f, p)
    d = jet(local_dict(f, p), m)
    ring = f.ring
    j, (i1, i2) = chart_indices(p)
    X = ring.gens()
    lu = X[i1] - X[j] * p.coords[i1]
    lv = X[i2] - X[j] * p.coords[i2]
    out = ring.zero()
    for (a, b), c in d.items():
        out = out + (lu**a) * (lv**b) * c
    return out


# --- Fulton's algorithm ------------------------------------------------------------


def _axis(d: dict) -> dict:
    """Restriction to v = 0, as {power of u: coeff}."""
    return {i: c for (i, j), c in d.items() if j == 0}


def _combine(G: dict, F: dict, cg, cf, shift: int) -> dict:
    """cg*G - cf*u^shift*F."""
    out = {k: v * cg for k, v in G.items()}
    for (i, j), c in F.items():
        k = (i + shift, j)
        w = out.get(k)
        v = -c * cf
        out[k] = v if w is None else w + v
    return {k: v for k, v in out.items() if v}


def _strip_monomial(F: dict) -> tuple:
    """(a, b, F') with F = u^a v^b F'."""
    a = min(i for i, _ in F)
    b = min(j for _, j in F)
    return a, b, {(i - a, j - b): c for (i, j), c in F.items()}


def _ord_on_axis(H: dict, axis: int) -> int:
    """I(u, H) for axis 0 (order of H(0, v)), I(v, H) for axis 1 (order of H(u, 0))."""
    return min(k[1 - axis] for k in H if k[axis] == 0)


def common_factor(F: dict, G: dict) -> dict:
    """gcd(F, G) as a local dict, computed as F*G / lcm with the lcm from an elimination."""
    from ..arith import field_of
    from ..ideals import Ideal, elimination_ideal

    K = field_of(next(iter(F.values())))
    T = PolyRing(K, ["_t", "u", "v"], "grevlex")
    t = T.var("_t")

    def lift(d):
        return T.from_terms(((0, i, j), c) for (i, j), c in d.items())

    f, g = lift(F), lift(G)
    E = elimination_ideal(Ideal(T, [t * f, (1 - t) * g]), ["_t"])
    lcm = min(E.gens, key=lambda h: h.total_degree())
    S = E.ring
    gcd = (S.convert(f) * S.convert(g)).exact_div(lcm)
    return {tuple(S.decode(k)): c for k, c in gcd.terms.items()}


def _exact_quotient(F: dict, D: dict) -> dict:
    from ..arith import field_of

    S = local_ring(field_of(next(iter(F.values()))))
    q = dict_to_poly(F, S).exact_div(dict_to_poly(D, S))
    return poly_to_dict(q)


def fulton(F: dict, G: dict):
    """Intersection multiplicity at the origin of two local polynomials.

    Returns ``INFINITE`` when F and G share a component through the origin.
    """
    F = {k: c for k, c in F.items() if c}
    G = {k: c for k, c in G.items() if c}
    if not F or not G:
        return INFINITE
    a, b, F = _strip_monomial(F)
    c, d, G = _strip_monomial(G)
    if (a and c) or (b and d):
        return INFINITE
    # I(u^a v^b F, u^c v^d G) by additivity, with I(u, v) = 1
    total = a * d + b * c
    total += a * _ord_on_axis(G, 0) + b * _ord_on_axis(G, 1)
    total += c * _ord_on_axis(F, 0) + d * _ord_on_axis(F, 1)
    return total + _fulton_core(F, G)


def _fulton_core(F: dict, G: dict, checked: bool = False):
    # without a common component the local number is at most the Bezout bound
    bound = max(i + j for i, j in F) * max(i + j for i, j in G)
    F_in, G_in = F, G
    total = 0
    steps = 0
    while True:
        steps += 1
        if steps > _FULTON_STEP_CAP:
            raise RuntimeError("intersection multiplicity did not terminate within the step cap")
        if total > bound:
            return INFINITE
        if steps == _GCD_CHECK_AFTER and not checked:
            D = common_factor(F_in, G_in)
            if order_of(D) > 0:
                return INFINITE
            if len(D) > 1:
                # a common factor that is a unit at the origin can be cancelled
                return _fulton_core(_exact_quotient(F_in, D), _exact_quotient(G_in, D), True)
            checked = True
        if not F or not G:
            return INFINITE
        if F.get((0, 0)) or G.get((0, 0)):
            return total
        F0, G0 = _axis(F), _axis(G)
        if not F0 and not G0:
            return INFINITE
        if not F0:
            F, G, F0, G0 = G, F, G0, F0
        if not G0:
            # G = v * H; I(F, v) = ord_u F(u, 0)
            total += min(F0)
            G = {(i, j - 1): c for (i, j), c in G.items()}
            continue
        r, s = max(F0), max(G0)
        if r > s:
            F, G, F0, G0, r, s = G, F, G0, F0, s, r
        G = _combine(G, F, F0[r], G0[s], s - r)


def intersection_multiplicity(f: MultiPoly, g: MultiPoly, p: ProjPoint):
    """I_p(f, g) for plane curves given by forms in the same ring."""
    if f.ring != g.ring:
        raise ValueError("ring mismatch")
    return fulton(local_dict(f, p), local_dict(g, p))


# --- Milnor number and classification --------------------------------------------


def _d_u(d: dict) -> dict:
    return {(i - 1, j): c * i for (i, j), c in d.items() if i}


def _d_v(d: dict) -> dict:
    return {(i, j - 1): c * j for (i, j), c in d.items() if j}


def milnor_local(d: dict):
    return fulton(_d_u(d), _d_v(d))


def milnor_number(f: MultiPoly, p: ProjPoint) -> int:
    d = local_dict(f, p)
    m = order_of(d)
    if m == 0:
        raise NotOnCurve(f"{p} is not on the curve")
    if m == 1:
        raise SmoothPoint(f"{p} is a smooth point")
    return milnor_local(d)


@dataclass(frozen=True)
class SingularityReport:
    point: ProjPoint
    multiplicity: int
    milnor: object
    label: str

    def as_dict(self, generator: str = "r") -> dict:
        mu = self.milnor if self.milnor != INFINITE else "inf"
        return {"point": self.point.to_str(generator), "multiplicity": self.multiplicity, "milnor": mu, "label": self.label}


def label_for(multiplicity: int, milnor) -> str:
    if multiplicity == 2 and milnor != INFINITE:
        return f"a{milnor}"
    return "other"


def classify_local(d: dict) -> tuple:
    m = order_of(d)
    if m < 2:
        raise SmoothPoint("not a singular point")
    mu = milnor_local(d)
    return m, mu, label_for(m, mu)


def classify_ADE(f: MultiPoly, p: ProjPoint) -> SingularityReport:
    d = local_dict(f, p)
    m = order_of(d)
    if m == 0:
        raise NotOnCurve(f"{p} is not on the curve")
    if m == 1:
        raise SmoothPoint(f"{p} is a smooth point")
    mu = milnor_local(d)
    return SingularityReport(p, m, mu, label_for(m, mu))


def delta_invariant_ak(k: int) -> int:
    """delta of an a_k double point: ceil(k / 2)."""
    return (k + 1) // 2
