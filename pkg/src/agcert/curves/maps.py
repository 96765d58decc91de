"""Rational maps between projective spaces, Cremona images and implicitization."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..ideals import Budget, Ideal, divide_out, elimination_ideal, groebner
from ..poly.ring import MultiPoly, PolyRing


class ContractedCurve(ValueError):
    pass


@dataclass
class ProjMap:
    """[f_0 : ... : f_k] with homogeneous components of one degree."""

    components: list
    target: PolyRing
    base_locus: list = dc_field(default_factory=list)

    def __post_init__(self):
        comps = list(self.components)
        if len(comps) != self.target.nvars:
            raise ValueError("component count does not match target dimension")
        ring = comps[0].ring
        degs = {f.total_degree() for f in comps if f}
        if len(degs) != 1 or any(f and not f.is_homogeneous() for f in comps):
            raise ValueError("components must be homogeneous of one degree")
        if any(f.ring != ring for f in comps):
            raise ValueError("components live in different rings")
        self.components = comps

    @property
    def source(self) -> PolyRing:
        return self.components[0].ring

    @property
    def degree(self) -> int:
        return next(f.total_degree() for f in self.components if f)

    def __call__(self, p):
        vals = [f.evaluate(list(p)) for f in self.components]
        return vals

    def pullback(self, G: MultiPoly) -> MultiPoly:
        """G composed with the map, as a form on the source."""
        if G.ring != self.target:
            G = self.target.convert(G)
        return G.substitute(dict(zip(self.target.vars, self.components)), target=self.source)


def compose(outer: ProjMap, inner: ProjMap) -> ProjMap:
    """outer after inner."""
    comps = [inner.pullback(f) for f in outer.components]
    return ProjMap(comps, outer.target)


def linear_map(matrix, source: PolyRing, target: PolyRing) -> ProjMap:
    X = source.gens()
    comps = []
    for row in matrix:
        f = source.zero()
        for a, x in zip(row, X):
            if a:
                f = f + x * a
        comps.append(f)
    return ProjMap(comps, target)


def standard_cremona(ring: PolyRing, target: PolyRing | None = None) -> ProjMap:
    x, y, z = ring.gens()
    return ProjMap([y * z, x * z, x * y], target or ring)


@dataclass
class MappedCurve:
    form: MultiPoly
    degree: int
    removed: list  # (exceptional form, multiplicity)


def apply_map(F: MultiPoly, phi: ProjMap, exceptional) -> MappedCurve:
    """Substitute phi into F and strip every exceptional factor maximally.

    With phi the inverse of a birational map, this is the equation of the
    image of F = 0.
    """
    G = phi.pullback(F)
    if not G:
        raise ContractedCurve("substituted form vanishes identically")
    removed = []
    for e in exceptional:
        G, k = divide_out(G, phi.source.convert(e))
        removed.append((e, k))
    return MappedCurve(G, G.total_degree(), removed)


# --- implicitization --------------------------------------------------------------------


@dataclass
class ImageData:
    equations: list
    degree: int
    certified: bool
    chart: str

    @property
    def equation(self) -> MultiPoly:
        if len(self.equations) != 1:
            raise ValueError("image is not a hypersurface")
        return self.equations[0]


def image_of(phi: ProjMap, source_gens=(), chart: str | None = None, budget: Budget | None = None) -> ImageData:
    """Closure of the image of V(source_gens) under phi, by elimination.

    Works in the affine chart ``chart = 1`` of the source and adds one
    scaling variable so that the eliminated ideal is homogeneous in the
    target coordinates.  Every generator G is certified by checking that
    G composed with phi lies in the source ideal.
    """
    S = phi.source
    T = phi.target
    chart = chart or S.vars[-1]
    src_aff = [v for v in S.vars if v != chart]
    tnames = [f"_t{i}" for i in range(T.nvars)]
    lam = "_lam"
    E = PolyRing(S.field, src_aff + [lam] + tnames, "grevlex")
    L = E.var(lam)
    gens = []
    for tn, f in zip(tnames, phi.components):
        gens.append(E.var(tn) - L * E.convert(f.substitute({chart: 1})))
    for g in source_gens:
        h = E.convert(g.substitute({chart: 1}))
        if h:
            gens.append(h)
    elim = elimination_ideal(Ideal(E, gens), src_aff + [lam], budget=budget)
    rename = PolyRing(S.field, tnames, "grevlex")
    eqs = []
    for g in elim.gens:
        g = rename.convert(g)
        eqs.append(MultiPoly(T, {T.encode(rename.decode(k)): c for k, c in g.terms.items()}).monic())
    eqs.sort(key=lambda f: (f.total_degree(), len(f)))
    certified = _certify(phi, eqs, source_gens)
    deg = eqs[0].total_degree() if len(eqs) == 1 else -1
    return ImageData(eqs, deg, certified, chart)


def _certify(phi: ProjMap, eqs, source_gens) -> bool:
    gens = [g for g in source_gens if g]
    G = groebner(gens) if gens else None
    for e in eqs:
        h = phi.pullback(e)
        if G is None:
            if h:
                return False
        elif G.reduce(h):
            return False
    return True


def image_curve(phi: ProjMap, F: MultiPoly | None = None, budget: Budget | None = None) -> ImageData:
    """Implicit equation of phi(F = 0), or of phi(P^n) when F is None."""
    return image_of(phi, [F] if F is not None else [], budget=budget)
