import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from agcert.arith import QQ, Rat
from agcert.ideals import (
    Budget,
    BudgetExceeded,
    Ideal,
    NotZeroDimensional,
    elimination_ideal,
    groebner,
    ideals_equal,
    is_reduced_groebner,
    member,
    solve_zero_dim,
    spoly,
)
from agcert.poly import make_ring
from conftest import SQRT_M2

X, Y, Z = sp.symbols("x y z")


def sym(f):
    return sp.sympify(str(f).replace("^", "**"))


def small_poly(rng, ring, terms=3, deg=2):
    f = ring.zero()
    for _ in range(terms):
        e = [rng.randint(0, deg) for _ in ring.vars]
        f = f + ring.monomial(e) * rng.randint(-3, 3)
    return f


@pytest.mark.parametrize("order", ["grevlex", "lex"])
def test_reduced_basis_matches_sympy(order):
    R = make_ring("x y z", QQ, order)
    rng = random.Random(21)
    checked = 0
    for _ in range(12):
        gens = [small_poly(rng, R) for _ in range(3)]
        gens = [g for g in gens if g]
        if not gens:
            continue
        mine = {sp.expand(sym(g)) for g in groebner(gens).basis}
        ref = sp.groebner([sym(g) for g in gens], X, Y, Z, order=order)
        theirs = {sp.expand(p.as_expr() / p.LC(order=order)) for p in ref.polys}
        assert mine == theirs
        checked += 1
    assert checked >= 10


def test_textbook_lex_example():
    R = make_ring("x y", QQ, "lex")
    x, y = R.gens()
    G = groebner([x * x + x * y * y * 2, x * y + y**3 * 2 - 1])
    assert [str(g) for g in G.basis] == ["x", "y^3-1/2"]


R3 = make_ring("x y z", QQ)
monos = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
gen_polys = st.lists(st.tuples(monos, st.integers(-3, 3)), min_size=1, max_size=3).map(
    lambda ts: R3.from_terms((e, Rat(c)) for e, c in ts)
)


@settings(max_examples=80)
@given(st.lists(gen_polys, min_size=1, max_size=3))
def test_basis_is_reduced_and_spairs_vanish(gens):
    gens = [g for g in gens if g]
    if not gens:
        return
    G = groebner(gens)
    assert is_reduced_groebner(G)
    for g in gens:
        assert G.contains(g)
    for i, f in enumerate(G.basis):
        for h in G.basis[i + 1 :]:
            assert not G.reduce(spoly(f, h))


@settings(max_examples=50)
@given(st.lists(gen_polys, min_size=2, max_size=3), st.randoms(use_true_random=False))
def test_basis_does_not_depend_on_generator_order(gens, rnd):
    gens = [g for g in gens if g]
    if not gens:
        return
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert groebner(gens).basis == groebner(shuffled).basis
    assert ideals_equal(Ideal(R3, gens), Ideal(R3, shuffled))


def test_membership_and_unit_ideal():
    x, y, z = R3.gens()
    I = Ideal(R3, [x * y - 1, y])
    assert groebner(I.gens).is_unit()
    J = Ideal(R3, [x * x - y, x * y - z])
    assert member(x * z - y * y, J)
    assert not member(x, J)


def test_twisted_cubic_elimination():
    R = make_ring("t x y z", QQ)
    t, x, y, z = R.gens()
    I = Ideal(R, [x - t, y - t * t, z - t**3])
    E = elimination_ideal(I, ["t"])
    S = E.ring
    x, y, z = S.gens()
    assert ideals_equal(E, Ideal(S, [y - x * x, z - x * y]))


def test_solve_zero_dim_over_extension():
    R = make_ring("x y", SQRT_M2)
    x, y = R.gens()
    r = SQRT_M2.gen()
    sol = solve_zero_dim(Ideal(R, [x * x + 2, y - x * 3]))
    assert set(sol.points) == {(r, 3 * r), (-r, -3 * r)}
    assert not sol.residual
    # x^2 - 3 has no root here: it comes back as a residual factor
    sol = solve_zero_dim(Ideal(R, [x * x - 3, y]))
    assert sol.points == [] and sol.residual_degree() == 2
    with pytest.raises(NotZeroDimensional):
        solve_zero_dim(Ideal(R, [x * y]))


def test_budgets_raise_instead_of_running_on():
    R = make_ring("x y z w", QQ)
    x, y, z, w = R.gens()
    cyclic4 = [x + y + z + w, x * y + y * z + z * w + w * x, x * y * z + y * z * w + z * w * x + w * x * y, x * y * z * w - 1]
    assert groebner(cyclic4).stats.pairs > 2
    with pytest.raises(BudgetExceeded) as exc:
        groebner(cyclic4, budget=Budget(max_pairs=2))
    assert exc.value.resource == "pairs"
    x, y, z = R.gens()[:3]
    katsura3 = [x + y * 2 + z * 2 - 1, x * x + y * y * 2 + z * z * 2 - x, x * y * 2 + y * z * 2 - y]
    assert groebner(katsura3).stats.max_bits > 6
    with pytest.raises(BudgetExceeded) as exc:
        groebner(katsura3, budget=Budget(max_bits=6))
    assert exc.value.resource == "coefficient bits"
    gens = cyclic4
    with pytest.raises(BudgetExceeded):
        groebner(gens, budget=Budget(max_seconds=0.0))
