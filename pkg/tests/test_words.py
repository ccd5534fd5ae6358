from __future__ import annotations

import pytest
from hypothesis import given

from braid3 import BraidWord, BraidWordError, parse_word
from braid3.flype import FlypeTriple, flype_word
from braid3.words import (
    component_count,
    concat,
    cyclic_rotate,
    exponent_sum,
    free_reduce,
    inverse,
    permutation,
    self_linking,
    stabilize,
)
from conftest import b3_words


def W(*letters, n=3):
    return BraidWord(n, tuple(letters))


def test_parse_syllable_form():
    w = parse_word("s1^3 s2^-2 s1^2 s2^-1")
    assert w.strands == 3 and len(w) == 8
    assert w.letters == (1, 1, 1, -2, -2, 1, 1, -2)
    assert str(w) == "s1^3 s2^-2 s1^2 s2^-1"


def test_parse_compact_form():
    assert parse_word("1 1 1 -2") == BraidWord.from_syllables(3, [(1, 3), (2, -1)])
    assert parse_word("").letters == () and parse_word("").strands == 2
    assert parse_word("s1^1", strands_override=4).strands == 4


@pytest.mark.parametrize("bad", ["s1^0", "0", "s0^1", "s1", "x^2", "s1^2 3", "s1^a"])
def test_parse_errors(bad):
    with pytest.raises(BraidWordError):
        parse_word(bad)


def test_strand_override_too_small():
    with pytest.raises(BraidWordError):
        parse_word("s3^1", strands_override=3)


def test_free_reduce():
    assert free_reduce(W(1, -1)) == W()
    assert free_reduce(W(1, 2, -2, 1)) == W(1, 1)
    assert free_reduce(W(1, 2, 1)) == W(1, 2, 1)


@given(b3_words())
def test_free_reduce_idempotent_and_inverse(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert free_reduce(concat(w, inverse(w))) == W()
    assert exponent_sum(concat(w, inverse(w))) == 0


def test_inverse_concat_rotate():
    assert inverse(W(1, -2)) == W(2, -1)
    w = W(1, 2, -1)
    assert concat(w, W()) == w
    assert cyclic_rotate(w, 1) == W(2, -1, 1)
    assert cyclic_rotate(w, 4) == cyclic_rotate(w, 1)
    with pytest.raises(BraidWordError):
        concat(W(1), W(1, n=4))


def test_permutation_and_components():
    assert sorted(permutation(W(1, 2)).cycle_type()) == [3]
    assert component_count(W(2)) == 2
    assert component_count(W(1, 2)) == 1
    assert component_count(W()) == 3
    # u odd, v and w even: a knot; v odd, u and w even: three components
    assert permutation(flype_word(FlypeTriple(3, -2, 2))).cycle_type() == (3,)
    assert component_count(flype_word(FlypeTriple(2, 3, 2))) == 3


def test_exponent_sum_and_self_linking():
    assert exponent_sum(parse_word("s1^3 s2^-2 s1^2 s2^-1")) == 2
    assert exponent_sum(W()) == 0
    assert self_linking(flype_word(FlypeTriple(3, -2, 2))) == -1
    assert self_linking(flype_word(FlypeTriple(5, 3, 3))) == 7
    assert self_linking(W(1, 2)) == -1


def test_stabilize():
    w = stabilize(W(1, 1, 1), -1)
    assert w.strands == 4 and w.letters == (1, 1, 1, -3)
    assert component_count(w) == component_count(W(1, 1, 1))


def test_letters_validated():
    with pytest.raises(BraidWordError):
        W(3)
    with pytest.raises(BraidWordError):
        W(0)
