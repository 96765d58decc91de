"""Intersection numbers on normal surfaces with cyclic quotient singularities.

A curve on the singular surface is described numerically: its Mumford
self-intersection, its degree against the canonical class, and the
integers u_i = (strict transform) . E_i against every exceptional curve of
the minimal resolution.  The strict transform is p^*C - sum a_i E_i with
a = M^{-1} u, where M is minus the exceptional intersection matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .arith import Rat
from .linalg import mat_vec, solve


# --- Hirzebruch-Jung chains ------------------------------------------------------------


@dataclass(frozen=True)
class CycQuotSing:
    n: int
    q: int

    def __post_init__(self):
        if not (0 < self.q < self.n) or math.gcd(self.n, self.q) != 1:
            raise ValueError(f"1/{self.n}(1,{self.q}) needs 0 < q < n and gcd(n, q) = 1")

    def __str__(self):
        return f"1/{self.n}(1,{self.q})"


@dataclass(frozen=True)
class ResolutionChain:
    sing: CycQuotSing
    b: tuple  # the curves have self-intersection -b_i

    @property
    def self_intersections(self) -> tuple:
        return tuple(-x for x in self.b)

    def value(self) -> Rat:
        """Re-evaluate b_1 - 1/(b_2 - 1/(...))."""
        v = Rat(self.b[-1])
        for x in reversed(self.b[:-1]):
            v = x - 1 / v
        return v

    @property
    def is_ade(self) -> bool:
        return all(x == 2 for x in self.b)


def hj_resolution(n: int, q: int) -> ResolutionChain:
    s = CycQuotSing(n, q)
    b = []
    a, c = n, q
    while c:
        k = -(-a // c)  # ceiling
        b.append(k)
        a, c = c, k * c - a
    return ResolutionChain(s, tuple(b))


def chain_matrix(b: Sequence[int]) -> list:
    """Exceptional intersection matrix of a chain with self-intersections -b_i."""
    n = len(b)
    m = [[Rat(0)] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = Rat(-b[i])
        if i + 1 < n:
            m[i][i + 1] = m[i + 1][i] = Rat(1)
    return m


def _leading_minors(m) -> list:
    from .linalg import det

    return [det([row[:k] for row in m[:k]], Rat(1)) for k in range(1, len(m) + 1)]


def is_negative_definite(m) -> bool:
    minors = _leading_minors(m)
    return all((d < 0) if k % 2 == 0 else (d > 0) for k, d in enumerate(minors))


# --- model -------------------------------------------------------------------------------


@dataclass
class Block:
    name: str
    b: tuple

    @property
    def matrix(self) -> list:
        return chain_matrix(self.b)

    @property
    def size(self) -> int:
        return len(self.b)


class NormalSurfaceModel:
    """Exceptional chains of the minimal resolution, keyed by singularity name."""

    def __init__(self, blocks: Mapping[str, Sequence[int]]):
        self.blocks = {}
        for name, b in blocks.items():
            blk = Block(name, tuple(int(x) for x in b))
            if not is_negative_definite(blk.matrix):
                raise AssertionError(f"block {name} is not negative definite")
            self.blocks[name] = blk

    @classmethod
    def from_singularities(cls, sings: Mapping[str, tuple]) -> "NormalSurfaceModel":
        return cls({name: hj_resolution(n, q).b for name, (n, q) in sings.items()})

    def zero_u(self) -> dict:
        return {k: (0,) * b.size for k, b in self.blocks.items()}

    def norm_u(self, u: Mapping | None) -> dict:
        out = self.zero_u()
        for k, v in (u or {}).items():
            if k not in self.blocks:
                raise KeyError(f"unknown singularity {k!r}")
            v = tuple(int(x) for x in v)
            if len(v) != self.blocks[k].size or any(x < 0 for x in v):
                raise ValueError(f"bad local intersection vector for {k}")
            out[k] = v
        return out


# --- pullbacks and discrepancies ----------------------------------------------------------


def block_coefficients(b: Sequence[int], u: Sequence[int]) -> tuple:
    """a = M^{-1} u with M = -(intersection matrix of the chain)."""
    M = [[-x for x in row] for row in chain_matrix(b)]
    if not any(u):
        return tuple(Rat(0) for _ in u)
    return tuple(solve(M, [Rat(x) for x in u]))


def mumford_pullback(model: NormalSurfaceModel, u: Mapping) -> dict:
    """Exceptional coefficients of the strict transform, per singularity."""
    u = model.norm_u(u)
    return {k: block_coefficients(model.blocks[k].b, v) for k, v in u.items()}


def discrepancies(b: Sequence[int]) -> tuple:
    """d with K_Z = p^*K + sum d_i E_i, from K_Z . E_i = -2 - E_i^2."""
    E = chain_matrix(b)
    rhs = [Rat(x - 2) for x in b]
    return tuple(solve(E, rhs))


def canonical_class(model: NormalSurfaceModel) -> "DivisorClass":
    a = {k: tuple(-x for x in discrepancies(blk.b)) for k, blk in model.blocks.items()}
    return DivisorClass({"K": Rat(1)}, a)


# --- divisor classes ---------------------------------------------------------------------


@dataclass
class DivisorClass:
    """p^*(sum c_j D_j) - sum a_i E_i on the resolution.

    ``coeffs`` names classes on the singular surface, ``a`` holds the
    exceptional coefficients per singularity.
    """

    coeffs: dict
    a: dict = field(default_factory=dict)

    def __add__(self, other):
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            c[k] = c.get(k, 0) + v
        a = _add_a(self.a, other.a, 1)
        return DivisorClass(c, a)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s):
        s = Rat(s)
        return DivisorClass({k: v * s for k, v in self.coeffs.items()}, {k: tuple(x * s for x in v) for k, v in self.a.items()})

    __rmul__ = scale


def _add_a(a1, a2, s):
    out = {k: tuple(v) for k, v in a1.items()}
    for k, v in a2.items():
        if k in out:
            out[k] = tuple(x + s * y for x, y in zip(out[k], v))
        else:
            out[k] = tuple(s * y for y in v)
    return out


class IntersectionTable:
    """Symmetric Mumford intersection numbers among named classes."""

    def __init__(self, values: Mapping | None = None):
        self._v = {}
        for (x, y), val in (values or {}).items():
            self.set(x, y, val)

    def set(self, x, y, val):
        self._v[(x, y)] = Rat(val)
        self._v[(y, x)] = Rat(val)

    def get(self, x, y):
        try:
            return self._v[(x, y)]
        except KeyError:
            raise KeyError(f"missing intersection datum {x}.{y}") from None

    def has(self, x, y) -> bool:
        return (x, y) in self._v

    def items(self):
        return self._v.items()


def mumford_intersect(table: IntersectionTable, D1: DivisorClass, D2: DivisorClass):
    """Intersection number on the singular surface; bilinear in the coefficients."""
    total = Rat(0)
    for x, cx in D1.coeffs.items():
        for y, cy in D2.coeffs.items():
            if cx and cy:
                total += cx * cy * table.get(x, y)
    return total


def resolved_intersect(model: NormalSurfaceModel, table: IntersectionTable, D1: DivisorClass, D2: DivisorClass):
    """Intersection of the two classes on the resolution: D1.D2 - a1^T M a2."""
    total = mumford_intersect(table, D1, D2)
    for k, blk in model.blocks.items():
        a1 = D1.a.get(k)
        a2 = D2.a.get(k)
        if a1 is None or a2 is None:
            continue
        M = [[-x for x in row] for row in blk.matrix]
        Ma2 = mat_vec(M, list(a2))
        total -= sum(x * y for x, y in zip(a1, Ma2))
    return total


def strict_transform(model: NormalSurfaceModel, name: str, u: Mapping) -> DivisorClass:
    return DivisorClass({name: Rat(1)}, mumford_pullback(model, u))


# --- numerical curve data ------------------------------------------------------------------


def _dot(a: Mapping, u: Mapping) -> Rat:
    return sum((sum((Rat(x) * y for x, y in zip(a[k], u[k])), Rat(0)) for k in u), Rat(0))


def resolved_numbers(model: NormalSurfaceModel, self_int, k_deg, u: Mapping) -> tuple:
    """(C-bar^2, K_Z . C-bar) from numbers on the singular surface."""
    u = model.norm_u(u)
    a = mumford_pullback(model, u)
    d = {k: discrepancies(b.b) for k, b in model.blocks.items()}
    return Rat(self_int) - _dot(a, u), Rat(k_deg) + _dot(d, u)


def singular_numbers(model: NormalSurfaceModel, self_int_z, k_deg_z, u: Mapping) -> tuple:
    """(C^2, K . C) on the singular surface from numbers on the resolution."""
    u = model.norm_u(u)
    a = mumford_pullback(model, u)
    d = {k: discrepancies(b.b) for k, b in model.blocks.items()}
    return Rat(self_int_z) + _dot(a, u), Rat(k_deg_z) - _dot(d, u)


def singular_pairing(model: NormalSurfaceModel, dot_z, u1: Mapping, u2: Mapping):
    """C1 . C2 on the singular surface from the resolution value."""
    a1 = mumford_pullback(model, u1)
    return Rat(dot_z) + _dot(a1, model.norm_u(u2))


def canonical_square_singular(model: NormalSurfaceModel, k2_z):
    """K^2 on the singular surface from K_Z^2 (K_Z = p^*K + sum d_i E_i)."""
    total = Rat(k2_z)
    for blk in model.blocks.values():
        d = discrepancies(blk.b)
        E = blk.matrix
        Ed = mat_vec(E, list(d))
        total -= sum(x * y for x, y in zip(d, Ed))
    return total


def canonical_square_resolved(model: NormalSurfaceModel, k2):
    total = Rat(k2)
    for blk in model.blocks.values():
        d = discrepancies(blk.b)
        Ed = mat_vec(blk.matrix, list(d))
        total += sum(x * y for x, y in zip(d, Ed))
    return total


# --- adjunction search ---------------------------------------------------------------------


@dataclass
class AdjunctionSolution:
    u: dict
    self_int: Rat  # on the resolution
    k_deg: Rat

    def pattern(self) -> dict:
        return {k: tuple(sorted(v)) for k, v in self.u.items()}


@dataclass
class AdjunctionResult:
    solutions: list
    bound: int
    exhausted: bool  # some solution used the full bound, so a larger bound might add more

    @property
    def unique_pattern(self) -> bool:
        pats = {tuple(sorted(s.pattern().items())) for s in self.solutions}
        return len(pats) == 1

    @property
    def self_intersections(self) -> set:
        return {s.self_int for s in self.solutions}


def adjunction_search(
    model: NormalSurfaceModel,
    self_int,
    k_deg,
    through: Sequence[str],
    bound: int = 6,
    genus: int = 0,
) -> AdjunctionResult:
    """All u >= 0 with K_Z.C + C^2 = 2g - 2 for the strict transform.

    The curve meets the exceptional locus only over the singularities in
    ``through`` (at least once over each), and both resolved numbers must be
    integers.  ``bound`` caps sum(u).
    """
    through = list(through)
    sizes = [model.blocks[k].size for k in through]
    total = sum(sizes)
    target = Rat(2 * genus - 2)
    sols = []
    exhausted = False
    for vec in _bounded_vectors(total, bound):
        u, pos = {}, 0
        ok = True
        for k, s in zip(through, sizes):
            part = vec[pos : pos + s]
            pos += s
            if not any(part):
                ok = False
                break
            u[k] = part
        if not ok:
            continue
        c2, kc = resolved_numbers(model, self_int, k_deg, u)
        if c2 + kc != target:
            continue
        if Rat(c2).denominator != 1 or Rat(kc).denominator != 1:
            continue
        if sum(vec) == bound:
            exhausted = True
        sols.append(AdjunctionSolution(u, c2, kc))
    return AdjunctionResult(sols, bound, exhausted)


def _bounded_vectors(n: int, bound: int):
    for s in range(bound + 1):
        yield from _compositions(n, s)


def _compositions(n: int, s: int):
    if n == 0:
        if s == 0:
            yield ()
        return
    for first in range(s, -1, -1):
        for rest in _compositions(n - 1, s - first):
            yield (first,) + rest


# --- weighted projective planes and quotients ----------------------------------------------


def weighted_bezout(d1: int, d2: int, weights: Sequence[int]) -> Rat:
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    w = 1
    for x in weights:
        w *= x
    return Rat(d1 * d2, w)


@dataclass
class QuotientInvariants:
    K2: Rat
    euler: Rat


def quotient_canonical_square(order: int, kx_sq, kx_dot_r, r_sq) -> Rat:
    """K_Y^2 for Y = X/G with K_X = pi^*K_Y + R, R = sum (r_i - 1) B_i."""
    return (Rat(kx_sq) - 2 * Rat(kx_dot_r) + Rat(r_sq)) / order


def ramification_square(components) -> Rat:
    """R^2 from (coefficient r_i - 1, B_i . R) per component."""
    return sum((Rat(c) * Rat(br) for c, br in components), Rat(0))


def quotient_euler(order: int, fixed_euler: Sequence[int]) -> Rat:
    """e(X/G) = (1/|G|) sum_g e(Fix g); ``fixed_euler`` lists every group element."""
    if len(fixed_euler) != order:
        raise ValueError("need one fixed-locus Euler number per group element")
    return Rat(sum(fixed_euler), order)


def quotient_invariants(order: int, kx_sq, kx_dot_r, r_sq, fixed_euler) -> QuotientInvariants:
    K2 = quotient_canonical_square(order, kx_sq, kx_dot_r, r_sq)
    e = quotient_euler(order, fixed_euler)
    return QuotientInvariants(K2, e)


def resolved_euler(e_singular, model: NormalSurfaceModel) -> Rat:
    """Each singular point is replaced by a chain of l rational curves (Euler number l + 1)."""
    return Rat(e_singular) + sum(blk.size for blk in model.blocks.values())


def noether_c2(k2, chi: int = 1) -> Rat:
    return 12 * chi - Rat(k2)
