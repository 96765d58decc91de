import pickle

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from agcert.arith import Rat
from agcert.orbifold import (
    INF,
    OrbifoldPoint,
    OrbifoldSurface,
    Stratum,
    bmy_check,
    c2_monotone_in_weight,
    coweight,
    derived_beta,
    flat_surface,
    orb_c1sq,
    orb_c2,
    parse_weight,
    strata_audit,
)
from agcert.surfaces import IntersectionTable

weights = st.one_of(st.integers(2, 50), st.just(INF))


def plane_with_line(m, beta=None):
    """P^2 with a weighted line L and optionally one orbifold point off L."""
    T = IntersectionTable({("K", "K"): 9, ("K", "L"): -3, ("L", "L"): 1})
    pts = [OrbifoldPoint("p", beta)] if beta else []
    return OrbifoldSurface(3, [Stratum("L", m, 2, 2)], pts, T)


def sym_coweight(m):
    return sp.Integer(1) if m is INF else 1 - sp.Rational(1, m)


@settings(max_examples=80)
@given(weights, st.one_of(st.none(), st.integers(2, 30)))
def test_line_in_plane_against_closed_form(m, beta):
    O = plane_with_line(m, beta)
    d = sym_coweight(m)
    c2 = 3 - 2 * d - (sym_coweight(beta) if beta else 0)
    c1sq = (-3 + d) ** 2
    assert orb_c2(O) == Rat(str(c2))
    assert orb_c1sq(O) == Rat(str(c1sq))
    r = bmy_check(O)
    assert r.slack == 3 * r.c2 - r.c1sq
    assert r.equality == (r.slack == 0)


def test_flat_plane():
    r = bmy_check(flat_surface(3, 9))
    assert (r.c1sq, r.c2, r.slack, r.equality) == (9, 3, 0, True)


def test_infinity():
    assert parse_weight("inf") is INF and parse_weight("∞") is INF and parse_weight(7) == 7
    assert coweight(INF) == 1
    assert pickle.loads(pickle.dumps(INF)) is INF
    assert orb_c2(plane_with_line(INF)) == 1


@pytest.mark.parametrize("w", [0, 1, -3])
def test_rejects_small_weights(w):
    with pytest.raises(ValueError):
        plane_with_line(w)


def test_trivial_weight_allowed_on_request():
    O = OrbifoldSurface(3, [Stratum("L", 1, 2)], [], IntersectionTable({("K", "K"): 9, ("K", "L"): -3, ("L", "L"): 1}), allow_trivial_weights=True)
    assert orb_c1sq(O) == 9


def test_point_needs_isotropy():
    with pytest.raises(ValueError):
        OrbifoldSurface(3, [], [OrbifoldPoint("p", None)])
    with pytest.raises(ValueError):
        OrbifoldSurface(3, [], [OrbifoldPoint("p", 0)])


def test_bad_coweight():
    with pytest.raises(ValueError):
        coweight(0)


@settings(max_examples=60)
@given(st.lists(st.integers(2, 40), min_size=2, max_size=6, unique=True))
def test_c2_decreases_with_weight(ws):
    ws = sorted(ws)
    vals = c2_monotone_in_weight(plane_with_line(2), "L", ws)
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert orb_c2(plane_with_line(INF)) < vals[-1]


def test_derived_beta_and_audit():
    p = OrbifoldPoint("q", 6, on=("L", "M"), local_order=1)
    assert derived_beta(p, {"L": 2, "M": 3}) == 6
    assert derived_beta(p, {"L": 2, "M": INF}) is INF
    assert derived_beta(OrbifoldPoint("r", 16), {}) is None
    O = OrbifoldSurface(3, [Stratum("L", 2, 1, 2)], [OrbifoldPoint("q", 2, on=("L",))], IntersectionTable())
    assert strata_audit(O) == {"L": (1, 1)}
