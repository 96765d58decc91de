import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from agcert.arith import (
    QQ,
    FieldError,
    NFElem,
    NumberField,
    Rat,
    nf_embed,
    nf_sqrt,
    parse_field,
    rat_sqrt,
)
from conftest import CUBIC, SQRT_M2, ZETA8, elements

FIELDS = [SQRT_M2, ZETA8, CUBIC]


def to_sympy(a, field, t):
    coeffs = field.coeffs_of(a) if isinstance(a, NFElem) else [a] + [0] * (field.degree - 1)
    return sum(sp.Rational(int(c.numerator), int(c.denominator)) * t**k for k, c in enumerate(coeffs))


def sympy_min_poly(field, t):
    return sum(sp.Rational(int(c.numerator), int(c.denominator)) * t**k for k, c in enumerate(field.min_poly))


@pytest.mark.parametrize("field", FIELDS, ids=["sqrt-2", "zeta8", "cbrt2"])
def test_product_matches_sympy_reduction(field):
    rng = random.Random(7)
    t = sp.Symbol("t")
    m = sympy_min_poly(field, t)
    for _ in range(30):
        a, b = field.random_element(rng), field.random_element(rng)
        got = to_sympy(a * b, field, t)
        want = sp.rem(sp.expand(to_sympy(a, field, t) * to_sympy(b, field, t)), m, t)
        assert sp.expand(got - want) == 0


@pytest.mark.parametrize("field", FIELDS, ids=["sqrt-2", "zeta8", "cbrt2"])
def test_inverse_matches_sympy_invert(field):
    rng = random.Random(11)
    t = sp.Symbol("t")
    m = sympy_min_poly(field, t)
    for _ in range(20):
        a = field.random_element(rng)
        if not a:
            continue
        want = sp.invert(to_sympy(a, field, t), m, t)
        assert sp.expand(to_sympy(a.inverse(), field, t) - want) == 0


@settings(max_examples=150)
@given(st.data())
def test_field_axioms(data):
    field = data.draw(st.sampled_from(FIELDS))
    a, b, c = (data.draw(elements(field)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == field(0)
    assert a * field(1) == a
    if a:
        assert a * a.inverse() == field(1)
        assert (b / a) * a == b


def test_generators_satisfy_their_minimal_polynomials():
    r = SQRT_M2.gen()
    assert r * r == SQRT_M2(-2)
    z = ZETA8.gen()
    assert z**4 == ZETA8(-1)
    assert z**8 == ZETA8(1)


def test_reducible_minimal_polynomial_is_rejected():
    with pytest.raises(FieldError):
        NumberField([-4, 0, 1])  # t^2 - 4
    with pytest.raises(FieldError):
        NumberField([1, 0, 2, 0, 1])  # (t^2 + 1)^2


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        SQRT_M2(0).inverse()


def test_parse_field_and_rationals():
    assert parse_field("Q") is QQ
    K = parse_field("t^2+2")
    assert K.degree == 2 and K.min_poly == (2, 0, 1)


def test_square_roots():
    assert rat_sqrt(Rat(9, 4)) == Rat(3, 2)
    assert rat_sqrt(Rat(2)) is None
    r = SQRT_M2.gen()
    s = nf_sqrt(SQRT_M2(-8))
    assert s * s == SQRT_M2(-8)
    assert s in (2 * r, -2 * r)


def test_embedding_sqrt_minus_two_into_zeta8():
    z = ZETA8.gen()
    image = z + z**3  # a square root of -2 in Q(zeta8)
    assert image * image == ZETA8(-2)
    r = SQRT_M2.gen()
    a = 3 + 5 * r
    b = Rat(1, 7) - r
    e = lambda u: nf_embed(u, ZETA8, image)
    assert e(a * b) == e(a) * e(b)
    assert e(a + b) == e(a) + e(b)
