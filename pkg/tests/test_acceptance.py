"""Acceptance criteria 1-14, one PASS/FAIL line each (shown in the terminal summary)."""

import random
import time

import pytest

from agcert.arith import QQ, NumberField, Rat
from agcert.cli.registry import load_builtin, run_scenario
from agcert.curves.local import INFINITE, fulton
from agcert.ideals import groebner, is_reduced_groebner, spoly
from agcert.matgroups import closure, is_invariant, molien_series, reynolds_invariants
from agcert.matgroups.bolza import map_v, map_w, preserves_curve
from agcert.matgroups.invariants import reynolds
from agcert.matgroups.sd16 import invariant_ring, sd16
from agcert.poly import make_ring

from conftest import record_acceptance


def scenario(sid, optional=False):
    t = time.perf_counter()
    cert = run_scenario(load_builtin(sid), optional=optional)
    return {c.name: c for c in cert.checks}, cert, time.perf_counter() - t


def verdict(n, ok, detail, seconds, limit):
    ok = ok and seconds <= limit
    record_acceptance(n, ok, f"{detail} ({seconds:.1f}s, limit {limit}s)")
    assert ok, detail


def _value(v):
    if isinstance(v, list):
        return [_value(x) for x in v]
    if isinstance(v, str) and v.lstrip("-").replace("/", "").isdigit():
        return Rat(v)
    return v


def computed(checks, *names):
    return {n: _value(checks[n].computed) for n in names}


def all_pass(checks, *names):
    return all(checks[n].passed for n in names)


def test_criterion_01_quartic():
    names = ("singular_points", "singularity_types", "flexes", "flex_contact", "tangent_residual_points", "node_on_residual_line", "configuration_holds")
    ch, _, t = scenario("quartic")
    verdict(1, all_pass(ch, *names), f"quartic {computed(ch, 'singular_points', 'singularity_types')}", t, 10)


def test_criterion_02_triple_root():
    ch, _, t = scenario("triple-root-criterion")
    ok = all_pass(ch, "elimination_equals_invariant_ideal", "oracle_agreement") and ch["oracle_agreement"].computed == 500
    verdict(2, ok, "elimination ideal equals the invariant ideal; 500 oracle samples agree", t, 60)


def test_criterion_03_pencil():
    ch, _, t = scenario("pencil")
    ok = all_pass(ch, "dimension", "same_span") and ch["dimension"].computed == 2
    verdict(3, ok, "pencil dimension 2, span equals the two generators", t, 5)


def test_criterion_04_sampled_uniqueness():
    ch, _, t = scenario("falsify-pencil")
    ok = all_pass(ch, "target_holds", "sample_count", "all_samples_fail") and ch["sample_count"].computed == 20
    verdict(4, ok, "a = -8 satisfies the configuration, 20 sampled values fail", t, 600)


def test_criterion_05_adjunction():
    ch, _, t = scenario("adjunction-searches")
    want = {"L23_resolved_square": -1, "L13_resolved_square": 0, "L12_resolved_square": 2, "theta48_resolved_square": -1, "M48_dot_C0": 1}
    got = {k: ch[k].computed for k in want}
    verdict(5, got == want and all_pass(ch, *want), f"adjunction {got}", t, 1)


def test_criterion_06_invariants():
    ch, _, t1 = scenario("p138-invariants")
    s2, _, t2 = scenario("quotient-invariants-s2")
    got = computed(ch, "K2_weighted_bezout", "K2_resolution", "euler_singular", "euler_resolution")
    got.update(computed(s2, "M2", "K2_quotient"))
    want = {"K2_weighted_bezout": 6, "K2_resolution": 5, "euler_singular": 3, "euler_resolution": 7, "M2": 288, "K2_quotient": 6}
    verdict(6, got == want, f"{got}", t1 + t2, 1)


def test_criterion_07_hj():
    ch, _, t = scenario("p138-invariants")
    got = computed(ch, "hj_8_3", "disc_8_3", "hj_3_2", "disc_3_2", "hj_3_1", "disc_3_1")
    want = {
        "hj_8_3": [3, 3],
        "disc_8_3": [Rat(-1, 2)] * 2,
        "hj_3_2": [2, 2],
        "disc_3_2": [0, 0],
        "hj_3_1": [3],
        "disc_3_1": [Rat(-1, 3)],
    }
    verdict(7, got == want, "chains [3,3], [2,2], [3] with discrepancies -1/2, 0, -1/3", t, 1)


def test_criterion_08_conics():
    ch, _, t = scenario("conics")
    ok = all_pass(ch, "point_count", "pattern", "bezout_sums", "tangencies", "degrees")
    ok = ok and ch["point_count"].computed == 10 and ch["bezout_sums"].computed == [4] * 6
    verdict(8, ok, f"10 points, pattern and tangencies match; degrees {ch['degrees'].computed}", t, 60)


def test_criterion_09_quotient_map():
    ch, _, t = scenario("quotient-map-61")
    want = {"quadric_degree": 2, "cu_degree": 3, "cu_singularities": ["a2"], "co_degree": 2, "co_cu_multiplicities": [1, 1, 4], "flex_line_tangent_to_co": True}
    got = {k: ch[k].computed for k in want}
    verdict(9, got == want and all_pass(ch, "quadric_certified", "cu_certified", "co_certified"), f"{got}", t, 60)


def test_criterion_10_orbifold():
    ch, _, t = scenario("orbifold-W")
    want = {
        "K2_W": Rat(-2, 3),
        "Cu_square": -4,
        "Co_square": 2,
        "Fd_square": Rat(-1, 4),
        "H_square": Rat(-1, 6),
        "K_dot_H": Rat(-2, 3),
        "c2": Rat(3, 16),
        "c1sq": Rat(9, 16),
        "bmy_slack": 0,
    }
    got = computed(ch, *want)
    verdict(10, got == want, "c2 = 3/16, c1^2 = 9/16, slack 0", t, 1)


def test_criterion_11_corrected_maps():
    # everything except the literal preservation claim, on the y-rescaled maps
    ch, _, t = scenario("bolza-curve")
    names = ("v_preserves", "w_preserves", "v_order", "w_order", "v_fixed_x", "v_fixed_avoid_torsion", "w_fixed_divides_quartic")
    assert all_pass(ch, *names)
    assert (ch["v_order"].computed, ch["w_order"].computed) == (2, 3)
    assert t <= 10


@pytest.mark.xfail(strict=True, reason="the printed y-scalars of v and w do not preserve y^2 = x^5 - x; see the ledger")
def test_criterion_11_literal_maps():
    t = time.perf_counter()
    ok = preserves_curve(map_v()) and preserves_curve(map_w())
    detail = "literal v, w preserve the curve" if ok else "literal v, w violate Y^2 = f(X) by constants -i/2 and 1/64; corrected maps pass"
    record_acceptance(11, ok, f"{detail} ({time.perf_counter() - t:.1f}s, limit 10s)")
    assert ok


def test_criterion_12_sd16():
    ch, _, t = scenario("sd16", optional=True)
    ok = all_pass(ch, "order", "semidihedral", "d4_order", "mirror_count") and ch["order"].computed == 16
    ok = ok and ch["d4_order"].computed == 8 and ch["mirror_count"].computed == 4
    cusp = ch["mirror_image_cusp"]
    ok = ok and (cusp.passed or cusp.status == "indeterminate")
    verdict(12, ok, f"order 16, semidihedral, D4 with 4 mirrors, mirror image {cusp.computed}", t, 300)


def test_criterion_13_mirror24():
    ch, _, t = scenario("mirror24")
    want = {"weighted_homogeneous": True, "weighted_degree": 24, "bezout_24": 24, "bezout_8": 8, "bezout_3": 3}
    got = {k: ch[k].computed for k in want}
    verdict(13, got == want, f"{got}", t, 5)


@pytest.mark.slow
def test_criterion_13_stretch_census():
    ch, _, t = scenario("mirror24", optional=True)
    c = ch["census"]
    assert c.passed or c.status == "indeterminate"
    record_acceptance("13s", c.passed, f"stretch census {c.computed} ({t:.0f}s)")


# --- criterion 14: seeded randomized property cases ------------------------------------------


def _rand_local(rng, n=4):
    return {k: v for k, v in ((((rng.randint(0, 4), rng.randint(0, 4))), Rat(rng.randint(-4, 4))) for _ in range(n)) if k != (0, 0) and v} or {(1, 0): Rat(1)}


def _mul(F, G):
    out = {}
    for (a, b), c in F.items():
        for (d, e), f in G.items():
            out[(a + d, b + e)] = out.get((a + d, b + e), 0) + c * f
    return {k: v for k, v in out.items() if v}


def _add(F, G):
    out = dict(F)
    for k, v in G.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def fulton_case(rng):
    F, G, A = _rand_local(rng), _rand_local(rng), _rand_local(rng, 3)
    i = fulton(F, G)
    if i != fulton(G, F):
        return False
    if i < min(sum(k) for k in F) * min(sum(k) for k in G):
        return False
    if fulton(F, _add(G, _mul(A, F))) != i:
        return False
    # the line v = h u meets F with multiplicity ord_u F(u, h u)
    h = rng.randint(-3, 3)
    L = _add({(0, 1): Rat(1)}, {(1, 0): Rat(-h)})
    pulled = {}
    for (a, b), c in F.items():
        pulled[a + b] = pulled.get(a + b, 0) + c * Rat(h) ** b
    nz = [k for k, v in pulled.items() if v]
    return fulton(F, L) == (min(nz) if nz else INFINITE)


R3 = make_ring("x y z", QQ)


def groebner_case(rng):
    gens = []
    for _ in range(rng.randint(1, 3)):
        g = R3.from_terms(((rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)), Rat(rng.randint(-3, 3))) for _ in range(rng.randint(1, 3)))
        if g:
            gens.append(g)
    if not gens:
        return True
    G = groebner(gens)
    if not is_reduced_groebner(G) or not all(G.contains(g) for g in gens):
        return False
    return all(not G.reduce(spoly(f, h)) for i, f in enumerate(G.basis) for h in G.basis[i + 1 :])


FIELDS = [NumberField([2, 0, 1], gen="r"), NumberField([1, 0, 0, 0, 1], gen="z"), NumberField([-2, 0, 0, 1], gen="c")]


def field_case(rng):
    K = rng.choice(FIELDS)
    a, b, c = (K.from_coeffs([Rat(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(K.degree)]) for _ in range(3))
    ok = (a + b) * c == a * c + b * c and (a * b) * c == a * (b * c) and a * b == b * a
    ok = ok and a - a == K.zero and a * K.one == a
    if a:
        ok = ok and a * (1 / a) == K.one
    return ok


SD16 = sd16()
RING = invariant_ring(SD16.field)


def reynolds_case(rng):
    K = RING.field
    f = RING.from_terms(((rng.randint(0, 5), rng.randint(0, 5)), K.from_coeffs([rng.randint(-4, 4), rng.randint(-2, 2), 0, 0])) for _ in range(rng.randint(1, 4)))
    r = reynolds(f, SD16)
    return is_invariant(r, SD16) and reynolds(r, SD16) == r


def molien_case(rng):
    G = closure(rng.sample(SD16.elements, rng.randint(1, 2)), bound=64)
    d = rng.randint(0, 8)
    return molien_series(G, d + 1)[d] == len(reynolds_invariants(G, RING, d))


SUITES = [("fulton", fulton_case, 300), ("groebner", groebner_case, 250), ("field", field_case, 300), ("reynolds", reynolds_case, 100), ("molien", molien_case, 100)]


def test_criterion_14_property_suites():
    rng = random.Random(20240601)
    t = time.perf_counter()
    failures, total, per = 0, 0, {}
    for name, case, n in SUITES:
        bad = sum(1 for _ in range(n) if not case(rng))
        per[name] = f"{n - bad}/{n}"
        failures += bad
        total += n
    verdict(14, failures == 0 and total >= 1000, f"{total} randomized cases, {failures} failures {per}", time.perf_counter() - t, 300)
