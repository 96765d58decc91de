import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from agcert import _kernels
from agcert.arith import Rat

BACKENDS = _kernels.backends()
keys = st.integers(min_value=0, max_value=1 << 40)
coeffs = st.builds(Rat, st.integers(-20, 20).filter(bool), st.integers(1, 5))
polys = st.dictionaries(keys, coeffs, max_size=8)


def test_python_backend_always_available():
    assert "python" in BACKENDS


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_backend_module_has_every_kernel(name):
    mod = BACKENDS[name]
    for fn in ("poly_mul", "poly_mul_term", "poly_add_scaled", "normal_form", "divides_key"):
        assert callable(getattr(mod, fn))


@settings(max_examples=100)
@given(polys, polys)
def test_backends_agree_on_products(f, g):
    results = [mod.poly_mul(f, g) for mod in BACKENDS.values()]
    assert all(r == results[0] for r in results)


@settings(max_examples=100)
@given(polys, polys, coeffs, st.integers(0, 1 << 20))
def test_backends_agree_on_scaled_sums(f, g, c, shift):
    results = [mod.poly_add_scaled(f, g, c, shift) for mod in BACKENDS.values()]
    assert all(r == results[0] for r in results)
    assert all(v for v in results[0].values())


def test_backends_agree_on_normal_forms():
    from agcert.arith import QQ
    from agcert.ideals import groebner
    from agcert.poly import make_ring

    R = make_ring("x y z", QQ)
    x, y, z = R.gens()
    G = groebner([x * x - y, y * y - z * x, x * y * z - 1])
    red = [(g.lead_key(), g.lead_key() & R.low_mask, [(k, c) for k, c in g.terms.items() if k != g.lead_key()]) for g in G.basis]
    f = (x + y + z) ** 5
    outs = [mod.normal_form(f.terms, red, R.low_mask, R.guard) for mod in BACKENDS.values()]
    assert all(o == outs[0] for o in outs)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_deadline_interrupts_reduction(name):
    from agcert.arith import QQ
    from agcert.ideals import groebner
    from agcert.poly import make_ring

    R = make_ring("x y", QQ)
    x, y = R.gens()
    G = groebner([x - y - 1])
    red = [(g.lead_key(), g.lead_key() & R.low_mask, [(k, c) for k, c in g.terms.items() if k != g.lead_key()]) for g in G.basis]
    with pytest.raises(_kernels.DeadlineExceeded):
        BACKENDS[name].normal_form((x**60).terms, red, R.low_mask, R.guard, 0.0)


def test_environment_variable_forces_pure_backend():
    env = dict(os.environ, AGCERT_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import agcert._kernels as k; print(k.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
