import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from agcert.arith import Rat
from agcert.matgroups import (
    GroupTooLarge,
    NFMatrix,
    closure,
    element_order,
    is_invariant,
    mirrors,
    molien_series,
    presentation_semidihedral,
    reynolds_invariants,
    weighted_relations,
)
from agcert.matgroups.bolza import (
    automorphism_order,
    bolza_check,
    bolza_setup,
    corrected_y_scale,
    cyclotomic8,
    map_hyperelliptic,
    map_v,
    map_w,
    preserves_curve,
    torsion_x_polynomials,
    y_scale_defect,
)
from agcert.matgroups.invariants import act, reynolds
from agcert.matgroups.sd16 import basic_invariants, d4_subgroup, invariant_ring, sd16, sd16_generators

K = cyclotomic8()
Z = K.gen()
SD16 = sd16()
D4 = d4_subgroup()
R = invariant_ring(K)


def diag(a, b):
    return NFMatrix(K, [[Z**a, 0], [0, Z**b]])


def test_sd16_structure():
    _, g1, g2 = sd16_generators()
    assert SD16.order == 16
    assert presentation_semidihedral(SD16)
    assert [element_order(g1), element_order(g2), element_order(g1 @ g2)] == [4, 2, 8]
    assert all(g @ h in SD16 for g in SD16.elements for h in SD16.elements)
    assert all(g.inverse() in SD16 for g in SD16.elements)
    assert D4.order == 8 and all(g in SD16 for g in D4.elements)
    assert not presentation_semidihedral(D4)
    assert len(mirrors(D4)) == 4
    assert mirrors(closure([diag(2, 2)])) == []


def test_cyclic_not_semidihedral():
    C = closure([diag(1, 3), diag(4, 0)])
    assert C.order == 16 and not presentation_semidihedral(C)


def test_closure_guards():
    with pytest.raises(GroupTooLarge):
        closure([diag(1, 0)], bound=4)
    with pytest.raises(ValueError):
        closure([NFMatrix(K, [[1, 0], [0, 0]])])
    with pytest.raises(ValueError):
        closure([])
    with pytest.raises(GroupTooLarge):
        element_order(NFMatrix(K, [[1, 1], [0, 1]]), bound=20)


def test_molien_sd16_against_hilbert_series():
    # invariants of degrees 4, 6, 8 with one relation in degree 12
    t = sp.symbols("t")
    H = (1 - t**12) / ((1 - t**4) * (1 - t**6) * (1 - t**8))
    ser = sp.Poly(sp.series(H, t, 0, 25).removeO(), t)
    expected = [int(ser.coeff_monomial(t**k)) for k in range(25)]
    assert molien_series(SD16, 25) == expected


@pytest.mark.parametrize("a,b", [(1, 7), (1, 3), (2, 6), (1, 1), (4, 2)])
def test_molien_diagonal_cyclic(a, b):
    C = closure([diag(a, b)])
    # the exponent sum must be divisible by 8 for z^(a i + b j) = 1
    expected = [sum(1 for i in range(d + 1) if (a * i + b * (d - i)) % 8 == 0) for d in range(13)]
    assert molien_series(C, 13) == expected
    assert molien_series(C, 9) == [len(reynolds_invariants(C, R, d)) for d in range(9)]


subgroup_gens = st.lists(st.sampled_from(SD16.elements), min_size=1, max_size=3)


@settings(max_examples=40)
@given(subgroup_gens)
def test_molien_matches_reynolds_on_subgroups(gens):
    G = closure(gens, bound=64)
    assert 16 % G.order == 0
    mol = molien_series(G, 7)
    assert mol == [len(reynolds_invariants(G, R, d)) for d in range(7)]


forms = st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(-4, 4), st.integers(-2, 2)), min_size=1, max_size=5).map(
    lambda ts: R.from_terms(((i, j), K.from_coeffs([c, e, 0, 0])) for i, j, c, e in ts if c or e)
)


@settings(max_examples=100)
@given(forms, st.sampled_from([SD16, D4]))
def test_reynolds_is_invariant_projection(f, G):
    r = reynolds(f, G)
    assert is_invariant(r, G)
    assert reynolds(r, G) == r
    g = G.elements[5]
    assert act(act(f, g), G.elements[3]) == act(f, g @ G.elements[3])


def test_basic_invariants_and_relation():
    invs = basic_invariants(R)
    assert all(is_invariant(f, SD16) for f in invs)
    rel = weighted_relations(invs)
    assert [str(r.monic()) for r in rel] == ["X^3-1/2*Y^2+1/2*X*Z"]
    with pytest.raises(ValueError):
        reynolds_invariants(SD16, R, 40)


# --- the genus two curve y^2 = x^5 - x ----------------------------------------------------


def test_literal_maps_have_scalar_defect():
    v, w = map_v(), map_w()
    assert not preserves_curve(v) and not preserves_curve(w)
    assert y_scale_defect(v) == -Z**2 / 2
    assert y_scale_defect(w) == Rat(1, 64)


def test_corrected_maps():
    K_, i, s2, f = bolza_setup()
    vv, lv = corrected_y_scale(map_v(), 2)
    ww, lw = corrected_y_scale(map_w(), 3)
    assert lv == 1 + i and lw == 8
    rv, rw = bolza_check(vv), bolza_check(ww)
    assert rv.preserves and rw.preserves
    assert (rv.order, rw.order) == (2, 3)
    assert set(rv.fixed.x_roots) == {i * (1 + s2), i * (1 - s2)}
    tors = torsion_x_polynomials()
    assert all(p(x) for p in tors.values() for x in rv.fixed.x_roots)
    P = rw.fixed.polynomial
    assert P.degree == 2 and not (tors["x^4+4ix^2-1"] % P)


def test_hyperelliptic_involution():
    h = map_hyperelliptic()
    r = bolza_check(h)
    assert r.preserves and r.order == 2
    assert len(r.fixed.x_roots) + r.fixed.infinity == 6
    assert automorphism_order(h @ h) == 1


def test_literal_defects_against_sympy():
    x, i = sp.symbols("x"), sp.I
    f = lambda t: t**5 - t
    maps = [
        (-(x + i) / (i * x + 1), sp.sqrt(2) * (i - 1) / (i * x + 1) ** 3),
        (((1 + i) * x - (1 + i)) / ((1 - i) * x + (1 - i)), -1 / ((1 - i) * x + (1 - i)) ** 3),
    ]
    # Y^2 = c f(X) with Y = s y, so c = s^2 f(x) / f(X)
    consts = [sp.simplify(s**2 * f(x) / f(X)) for X, s in maps]
    assert consts == [-i / 2, sp.Rational(1, 64)]
