import math

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from agcert.arith import Rat
from agcert.surfaces import (
    CycQuotSing,
    DivisorClass,
    IntersectionTable,
    NormalSurfaceModel,
    adjunction_search,
    block_coefficients,
    canonical_square_resolved,
    canonical_square_singular,
    chain_matrix,
    discrepancies,
    hj_resolution,
    is_negative_definite,
    mumford_intersect,
    mumford_pullback,
    quotient_canonical_square,
    quotient_euler,
    resolved_euler,
    resolved_numbers,
    singular_numbers,
    weighted_bezout,
)

from conftest import rationals


@st.composite
def cyclic_types(draw):
    n = draw(st.integers(2, 60))
    q = draw(st.integers(1, n - 1).filter(lambda q: math.gcd(n, q) == 1))
    return n, q


def sympy_discrepancies(b):
    n = len(b)
    E = sp.zeros(n, n)
    for i in range(n):
        E[i, i] = -b[i]
        if i + 1 < n:
            E[i, i + 1] = E[i + 1, i] = 1
    rhs = sp.Matrix([x - 2 for x in b])
    return [Rat(str(v)) for v in E.LUsolve(rhs)]


@pytest.mark.parametrize(
    "n,q,b,d",
    [
        (8, 3, (3, 3), ("-1/2", "-1/2")),
        (3, 2, (2, 2), ("0", "0")),
        (3, 1, (3,), ("-1/3",)),
        (5, 2, (3, 2), ("-2/5", "-1/5")),
        (7, 1, (7,), ("-5/7",)),
    ],
)
def test_known_chains(n, q, b, d):
    ch = hj_resolution(n, q)
    assert ch.b == b
    assert discrepancies(ch.b) == tuple(Rat(x) for x in d)


@settings(max_examples=120)
@given(cyclic_types())
def test_chain_properties(nq):
    n, q = nq
    ch = hj_resolution(n, q)
    assert ch.value() == Rat(n, q)
    assert all(x >= 2 for x in ch.b)
    M = chain_matrix(ch.b)
    assert is_negative_definite(M)
    assert abs(sp.Matrix(M).det()) == n
    d = discrepancies(ch.b)
    assert list(d) == sympy_discrepancies(ch.b)
    assert all(-1 < x <= 0 for x in d)
    assert ch.is_ade == all(x == 0 for x in d)


def test_bad_cyclic_type():
    with pytest.raises(ValueError):
        CycQuotSing(6, 3)
    with pytest.raises(ValueError):
        CycQuotSing(4, 4)


def test_model_rejects_positive_block():
    with pytest.raises(AssertionError):
        NormalSurfaceModel({"bad": (1, 1)})


@settings(max_examples=60)
@given(cyclic_types(), st.data())
def test_pullback_solves_chain(nq, data):
    b = hj_resolution(*nq).b
    u = tuple(data.draw(st.integers(0, 4)) for _ in b)
    a = block_coefficients(b, u)
    M = -sp.Matrix(chain_matrix(b))
    assert list(M * sp.Matrix(a)) == list(u)
    assert all(x >= 0 for x in a)


@settings(max_examples=60)
@given(cyclic_types(), st.data(), rationals, rationals)
def test_resolved_and_singular_numbers_invert(nq, data, c2, kc):
    m = NormalSurfaceModel({"P": hj_resolution(*nq).b})
    u = {"P": tuple(data.draw(st.integers(0, 3)) for _ in m.blocks["P"].b)}
    z2, zk = resolved_numbers(m, c2, kc, u)
    assert singular_numbers(m, z2, zk, u) == (c2, kc)


def test_canonical_square_round_trip():
    m = NormalSurfaceModel.from_singularities({"P8": (8, 3), "P3": (3, 2), "P3b": (3, 1)})
    k2z = canonical_square_resolved(m, 6)
    assert canonical_square_singular(m, k2z) == 6
    assert canonical_square_resolved(NormalSurfaceModel.from_singularities({"P8": (8, 3), "P3": (3, 2)}), 6) == 5


def test_pullback_known_values():
    m = NormalSurfaceModel.from_singularities({"P8": (8, 3), "P3": (3, 2)})
    a = mumford_pullback(m, {"P8": (1, 0), "P3": (1, 0)})
    assert a["P8"] == (Rat(3, 8), Rat(1, 8))
    assert a["P3"] == (Rat(2, 3), Rat(1, 3))
    with pytest.raises(KeyError):
        m.norm_u({"P5": (1,)})
    with pytest.raises(ValueError):
        m.norm_u({"P8": (1,)})


names = st.sampled_from(["K", "A", "B"])
classes = st.dictionaries(names, rationals, min_size=1).map(DivisorClass)


@settings(max_examples=100)
@given(classes, classes, classes, rationals)
def test_mumford_intersect_bilinear_symmetric(D1, D2, D3, s):
    T = IntersectionTable({("K", "K"): 6, ("K", "A"): Rat(-1, 2), ("K", "B"): -4, ("A", "A"): Rat(1, 24), ("A", "B"): 1, ("B", "B"): Rat(8, 3)})
    assert mumford_intersect(T, D1, D2) == mumford_intersect(T, D2, D1)
    lhs = mumford_intersect(T, D1 + D2.scale(s), D3)
    assert lhs == mumford_intersect(T, D1, D3) + s * mumford_intersect(T, D2, D3)


def test_missing_table_entry():
    T = IntersectionTable({("K", "K"): 1})
    with pytest.raises(KeyError):
        mumford_intersect(T, DivisorClass({"K": 1}), DivisorClass({"A": 1}))


P138 = NormalSurfaceModel.from_singularities({"P8": (8, 3), "P3": (3, 2)})


@pytest.mark.parametrize(
    "self_int,k_deg,through,square",
    [
        ("1/24", "-1/2", ["P8", "P3"], -1),
        ("3/8", "-3/2", ["P8"], 0),
        ("8/3", "-4", ["P3"], 2),
    ],
)
def test_adjunction_unique(self_int, k_deg, through, square):
    res = adjunction_search(P138, Rat(self_int), Rat(k_deg), through)
    assert res.unique_pattern and not res.exhausted
    assert res.self_intersections == {square}
    for s in res.solutions:
        assert s.self_int + s.k_deg == -2


def test_adjunction_no_solution():
    res = adjunction_search(P138, Rat(1), Rat(0), ["P3"])
    assert res.solutions == []


def test_weighted_and_quotient_formulas():
    assert weighted_bezout(12, 12, (1, 3, 8)) == 6
    assert weighted_bezout(24, 3, (1, 3, 8)) == 3
    with pytest.raises(ValueError):
        weighted_bezout(1, 1, (0, 1, 1))
    assert quotient_canonical_square(1, 9, 0, 0) == 9
    assert quotient_euler(4, [3, 1, 1, 7]) == 3
    with pytest.raises(ValueError):
        quotient_euler(2, [3])
    assert resolved_euler(3, P138) == 7
