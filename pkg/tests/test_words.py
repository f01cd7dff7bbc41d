from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from doubling_holes.words import (
    PeriodicPoint, complement, doubling_step, finite_value, format_point, inf, lex_cmp, parse_point,
    periodic, primitive_root, rational_to_expansion, shift, word_value,
)
from strategies import fractions_in

words = st.text("01", min_size=1, max_size=12)


def test_canonical_form_merges_equal_sequences():
    assert periodic("01", "01") == inf("01")
    assert periodic("", "0101") == inf("01")
    assert periodic("1", "01") == inf("10")
    assert periodic("0", "0") == inf("0")


def test_values():
    assert word_value(inf("01")) == Fraction(1, 3)
    assert word_value(periodic("10", "01")) == Fraction(7, 12)
    assert word_value(periodic("1001", "10")) == Fraction(29, 48)
    assert word_value(periodic("0110", "01")) == Fraction(19, 48)
    assert finite_value("011") == Fraction(3, 8)


def test_expansions():
    assert rational_to_expansion(Fraction(1, 3)) == inf("01")
    assert rational_to_expansion(Fraction(1)) == inf("1")
    half = rational_to_expansion(Fraction(1, 2))
    assert half == periodic("1", "0") and half.has_dual
    assert half.dual() == periodic("0", "1")
    assert not inf("01").has_dual
    with pytest.raises(ValueError):
        inf("01").dual()
    with pytest.raises(ValueError):
        rational_to_expansion(Fraction(3, 2))


@given(fractions_in(-1, 2, 500) .filter(lambda x: 0 <= x <= 1))
def test_expansion_round_trip(x):
    p = rational_to_expansion(x)
    assert word_value(p) == x
    if p.has_dual:
        assert word_value(p.dual()) == x


@given(words, words, words, words)
def test_lex_order_matches_value_order(p1, c1, p2, c2):
    u, v = periodic(p1, c1), periodic(p2, c2)
    cmp = lex_cmp(u, v)
    assert cmp == -lex_cmp(v, u)
    if cmp < 0:
        assert word_value(u) <= word_value(v)
    if word_value(u) < word_value(v):
        assert cmp < 0
    assert (u < v) == (cmp < 0)


@given(words, words, st.integers(0, 20))
def test_shift_is_doubling_on_values(pre, cyc, k):
    p = periodic(pre, cyc)
    x = word_value(p)
    assert word_value(shift(p, 1)) == 2 * x - int(p.symbol(0))
    assert shift(p, k).prefix(10) == p.prefix(k + 10)[k:]


def test_doubling_step_branch_convention():
    assert doubling_step(Fraction(1, 2)) == 1
    assert doubling_step(Fraction(1)) == 1
    assert doubling_step(Fraction(2, 3)) == Fraction(1, 3)
    with pytest.raises(ValueError):
        doubling_step(Fraction(-1))


@given(words, words)
def test_parse_format_round_trip(pre, cyc):
    p = periodic(pre, cyc)
    assert parse_point(format_point(p)) == p


@pytest.mark.parametrize("bad", ["0.(", "0.12(1)", "1.(01)", "0.01", "0.()"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_point(bad)


def test_small_helpers():
    assert complement("0110") == "1001"
    assert primitive_root("010101") == "01"
    assert primitive_root("0110") == "0110"
    assert inf("01").prefix(5) == "01010"
    assert periodic("1", "0").symbol(5) == "0"
    assert str(periodic("10", "01")) == "0.10(01)"
    assert isinstance(parse_point("0.(1)"), PeriodicPoint)
