import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from agcert.arith import QQ, Rat
from agcert.poly import PolySyntaxError, RingMismatch, make_ring, parse_poly, print_poly
from agcert.poly.quartic import BinaryQuartic, has_triple_root, triple_root_by_gcd
from agcert.poly.resultant import discriminant_uni, resultant
from agcert.poly.roots import field_roots, split_off_roots
from agcert.poly.univariate import UPoly, squarefree_decomposition, upoly_gcd
from conftest import SQRT_M2, rationals

X, Y, Z = sp.symbols("x y z")
R = make_ring("x y z", QQ)


def random_poly(rng, ring, terms=5, deg=4):
    f = ring.zero()
    for _ in range(terms):
        e = [rng.randint(0, deg) for _ in ring.vars]
        f = f + ring.monomial(e) * Rat(rng.randint(-9, 9), rng.randint(1, 4))
    return f


def sym(f):
    return sp.sympify(str(f).replace("^", "**"))


polys = st.lists(
    st.tuples(st.tuples(*[st.integers(0, 3)] * 3), rationals), min_size=0, max_size=6
).map(lambda ts: R.from_terms(ts) if ts else R.zero())


def test_arithmetic_matches_sympy():
    rng = random.Random(3)
    for _ in range(40):
        f, g = random_poly(rng, R), random_poly(rng, R)
        assert sp.expand(sym(f * g) - sym(f) * sym(g)) == 0
        assert sp.expand(sym(f + g) - sym(f) - sym(g)) == 0
        assert sp.expand(sym(f**2) - sym(f) ** 2) == 0


def test_derivative_and_substitution_match_sympy():
    rng = random.Random(5)
    for _ in range(20):
        f = random_poly(rng, R)
        assert sp.expand(sym(f.diff("y")) - sp.diff(sym(f), Y)) == 0
        g = f.substitute({"x": R.var("y") + R.var("z") * 2})
        assert sp.expand(sym(g) - sym(f).subs(X, Y + 2 * Z)) == 0


@settings(max_examples=100)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == R.zero()
    if g:
        assert (f * g).exact_div(g) == f


@settings(max_examples=100)
@given(polys)
def test_print_parse_round_trip(f):
    assert parse_poly(print_poly(f), R) == f


def test_parser_over_extension_field():
    K = SQRT_M2
    S = make_ring("x y z", K)
    f = parse_poly("(2*r+1)*x^2 - r*y*z + 1/3*z^2", S)
    r = K.gen()
    x, y, z = S.gens()
    assert f == x * x * (2 * r + 1) - y * z * r + z * z * Rat(1, 3)
    with pytest.raises(PolySyntaxError):
        parse_poly("x^^2", S)
    with pytest.raises(PolySyntaxError):
        parse_poly("x + w", S)


def test_ring_mismatch_is_an_error():
    S = make_ring("x y", QQ)
    with pytest.raises(RingMismatch):
        R.var("x") + S.var("x")


def test_weighted_homogeneity():
    S = make_ring("x y z", QQ)
    x, y, z = S.gens()
    f = x**24 + x**21 * y + y**8 + z**3 + x**8 * z**2
    assert f.is_homogeneous((1, 3, 8))
    assert f.weighted_degree((1, 3, 8)) == 24
    assert not (f + x).is_homogeneous((1, 3, 8))


def test_univariate_gcd_and_squarefree():
    t = sp.Symbol("t")
    f = UPoly(QQ, [-1, 0, 1]) * UPoly(QQ, [2, 1]) ** 3  # (t^2-1)(t+2)^3
    g = UPoly(QQ, [2, 1]) * UPoly(QQ, [1, 1])
    assert upoly_gcd(f, g) == (UPoly(QQ, [2, 1]) * UPoly(QQ, [1, 1])).monic()
    parts = squarefree_decomposition(f)
    mults = sorted(m for _, m in parts)
    assert mults == [1, 3]


def test_roots_over_extension_against_sympy():
    K = SQRT_M2
    r = K.gen()
    # (x^2 + 2)(x - 1/3)(x^2 + x + 1): roots +-r and 1/3 in K, the cubic-root factor stays
    f = UPoly(K, [2, 0, 1]) * UPoly(K, [Rat(-1, 3), 1]) * UPoly(K, [1, 1, 1])
    roots = field_roots(f)
    assert set(roots) == {r, -r, K(Rat(1, 3))}
    rm, rest = split_off_roots(f)
    assert rest.degree == 2


def sylvester_det(f, g, x):
    a, b = sp.Poly(f, x).all_coeffs(), sp.Poly(g, x).all_coeffs()
    m, n = len(a) - 1, len(b) - 1
    rows = [[0] * i + a + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + b + [0] * (m - 1 - i) for i in range(m)]
    return sp.Matrix(rows).det()


def test_resultant_against_sympy_sylvester_determinant():
    rng = random.Random(9)
    S = make_ring("x y", QQ)
    checked = 0
    for _ in range(12):
        f, g = random_poly(rng, S, 4, 3), random_poly(rng, S, 4, 3)
        if f.degree("x") < 1 or g.degree("x") < 1:
            continue
        mine = sym(resultant(f, g, "x"))
        assert sp.expand(mine - sylvester_det(sym(f), sym(g), X)) == 0
        checked += 1
    assert checked >= 5


def test_resultant_of_linear_form_is_evaluation():
    S = make_ring("x y", QQ)
    x, y = S.gens()
    f = x * 2 - y
    g = x**3 - y * x + 1
    # Res(a x + b, g) = a^3 g(-b/a)
    assert resultant(f, g, "x") == g.substitute({"x": y * Rat(1, 2)}) * 8


def test_discriminant_of_cubic():
    # x^3 + p x + q has discriminant -4p^3 - 27q^2
    f = UPoly(QQ, [5, -3, 0, 1])
    assert discriminant_uni(f) == -4 * (-3) ** 3 - 27 * 25


@settings(max_examples=120)
@given(st.lists(st.integers(-6, 6), min_size=5, max_size=5).filter(any))
def test_triple_root_invariants_agree_with_gcd_test(c):
    q = BinaryQuartic(*[Rat(v) for v in c])
    assert has_triple_root(q)[0] == triple_root_by_gcd(q, QQ)


@settings(max_examples=60)
@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_forms_with_a_cubed_factor_have_triple_roots(u, v, m, n):
    if not (u or v) or not (m or n):
        return
    S = make_ring("x z", QQ)
    x, z = S.gens()
    f = (x * u + z * v) ** 3 * (x * m + z * n)
    c = [f.coefficient((4 - k, k)) for k in range(5)]
    assert has_triple_root(BinaryQuartic(*c))[0]
