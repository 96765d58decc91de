"""Linear systems of plane curves with imposed base conditions."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from ..linalg import kernel, rank, rref
from ..poly.ring import MultiPoly, PolyRing
from .local import jet, local_dict
from .points import ProjPoint


@dataclass
class MultiplicityCondition:
    point: ProjPoint
    multiplicity: int


@dataclass
class ConeCondition:
    """Double point at ``point`` whose tangent cone is proportional to ``cone``."""

    point: ProjPoint
    cone: MultiPoly


@dataclass
class LinearSystemSpec:
    degree: int
    conditions: list = dc_field(default_factory=list)


@dataclass
class LinearSystem:
    ring: PolyRing
    degree: int
    monomials: list
    basis: list
    rank: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def expected_ambient(self) -> int:
        return len(self.monomials)


def monomials_of_degree(n: int, d: int) -> list:
    """Exponent vectors of degree d in n variables, lex descending (x^d first)."""
    if n == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - a):
            out.append((a,) + rest)
    return out


def _cone_rows(col_jets, target: dict):
    """Rows forcing the quadratic jet to be proportional to ``target``."""
    keys = [(2, 0), (1, 1), (0, 2)]
    t = [target.get(k, 0) for k in keys]
    rows = []
    for i, j in combinations(range(3), 2):
        # q_i t_j - q_j t_i = 0
        rows.append([jt.get(keys[i], 0) * t[j] - jt.get(keys[j], 0) * t[i] for jt in col_jets])
    return rows


def condition_matrix(ring: PolyRing, degree: int, conditions) -> tuple:
    mons = monomials_of_degree(3, degree)
    polys = [ring.monomial(e) for e in mons]
    rows = []
    K = ring.field
    for cond in conditions:
        p = cond.point
        locs = [local_dict(f, p) for f in polys]
        m = cond.multiplicity if isinstance(cond, MultiplicityCondition) else 2
        for total in range(m):
            for a in range(total, -1, -1):
                key = (a, total - a)
                rows.append([K(d.get(key, 0)) for d in locs])
        if isinstance(cond, ConeCondition):
            target = jet(local_dict(cond.cone, p), 2)
            if not target:
                raise ValueError("prescribed cone does not have order 2 at the point")
            rows.extend([[K(v) for v in r] for r in _cone_rows([jet(d, 2) for d in locs], target)])
    return mons, rows


def linear_system(ring: PolyRing, spec: LinearSystemSpec) -> LinearSystem:
    mons, rows = condition_matrix(ring, spec.degree, spec.conditions)
    K = ring.field
    n = len(mons)
    ker = kernel(rows, n, K.zero, K.one)
    # echelonize so each basis form has a distinct leading monomial
    ker, _ = rref(ker) if ker else ([], [])
    basis = []
    for v in ker:
        f = ring.from_terms((e, c) for e, c in zip(mons, v) if c)
        basis.append(f)
    r = rank(rows) if rows else 0
    return LinearSystem(ring, spec.degree, mons, basis, r)


def same_span(A, B) -> bool:
    """Whether two lists of forms of equal degree span the same space."""
    if not A and not B:
        return True
    ring = (A or B)[0].ring
    keys = sorted({k for f in list(A) + list(B) for k in f.terms}, reverse=True)
    zero = ring.field.zero

    def mat(fs):
        return [[f.terms.get(k, zero) for k in keys] for f in fs]

    ra, rb = rank(mat(A)), rank(mat(B))
    return ra == rb == rank(mat(list(A) + list(B)))
