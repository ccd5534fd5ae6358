from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from braid3.laurent import LaurentPolynomial as P

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(lambda d: P(d, "t"))


def test_zero_terms_dropped_and_equality_structural():
    assert P({0: 0, 2: 3}) == P({2: 3})
    assert P({}).is_zero() and str(P({})) == "0"
    assert hash(P({1: 1, 0: 1})) == hash(P([(0, 1), (1, 1)]))


def test_text_form():
    assert str(P({-8: -1, -6: 1, -2: 1}, "q")) == "-q^-8 + q^-6 + q^-2"
    assert str(P({0: 3, 1: -2, 2: 1}, "t")) == "3 - 2*t^1 + t^2"


@given(polys)
def test_parse_roundtrip(p):
    assert P.parse(str(p), "t") == p


@pytest.mark.parametrize("bad", ["", "t^", "2**t^1", "q^2", "1 +", "t^1 t^2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        P.parse(bad, "t")


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == P({})


@given(polys, polys)
def test_exact_division_recovers_factor(a, b):
    divisor = P({0: 1, 1: 1, 2: 1})
    assert (a * divisor).divmod_exact(divisor) == a
    if not b.is_zero():
        q = b.shift(3)
        assert (q * P({-1: -1, 0: 2, 4: 1})).divmod_exact(P({-1: -1, 0: 2, 4: 1})) == q


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        P({0: 1, 1: 1}).divmod_exact(P({0: 1, 1: 1, 2: 1}))
    with pytest.raises(ZeroDivisionError):
        P({0: 1}).divmod_exact(P({}))


def test_powers_and_evaluation():
    t = P.monomial(1)
    assert (1 + t) ** 3 == P({0: 1, 1: 3, 2: 3, 3: 1})
    assert t ** -2 == P.monomial(-2)
    with pytest.raises(ValueError):
        (1 + t) ** -1
    assert P({0: 1, 1: -3, 2: 1})(-1) == 5


def test_normalized_and_substitution():
    assert P({-3: -1, -2: 2}).normalized() == P({0: 1, 1: -2})
    p = P({1: 1, -2: 3})
    assert p.substitute_power(-2).divide_exponents(-2) == p
    with pytest.raises(ValueError):
        P({1: 1}).divide_exponents(2)
