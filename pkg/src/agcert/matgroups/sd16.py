"""The semidihedral group of order 16 and its reflection subgroup."""

from __future__ import annotations

from ..poly.ring import make_ring
from .bolza import cyclotomic8
from .groups import NFMatrix, closure


def sd16_generators():
    K = cyclotomic8()
    z = K.gen()
    g1 = NFMatrix(K, [[0, -z], [-(z**3), 0]])
    g2 = NFMatrix(K, [[0, 1], [1, 0]])
    return K, g1, g2


def sd16():
    K, g1, g2 = sd16_generators()
    return closure([g1, g2], bound=64)


def d4_subgroup():
    K, g1, g2 = sd16_generators()
    return closure([g2, g1.inverse() @ g2 @ g1], bound=64)


def invariant_ring(K=None):
    K = K or cyclotomic8()
    return make_ring("x y", K)


def basic_invariants(ring):
    """Invariants of degrees 4, 6, 8 that generate the invariant ring."""
    x, y = ring.gens()
    return [x**2 * y**2, x * y * (x**4 + y**4), x**8 + y**8]
