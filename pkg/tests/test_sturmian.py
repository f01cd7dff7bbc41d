from fractions import Fraction
from itertools import repeat

import pytest
from hypothesis import given

from doubling_holes.sturmian import (
    characteristic_word, compose_st, continued_fraction, cyclic_class, is_balanced, is_cyclically_balanced,
    limit_word, omega_pair, parse_rvector, q_products, rotation, rotations, standard_word, substitute,
    substitute_many,
)
from doubling_holes.words import complement
from strategies import rotation_numbers

R = Fraction


def test_omega_fixtures():
    assert omega_pair(R(2, 5)) == ("01010", "10010")
    assert omega_pair(R(3, 5)) == ("01101", "10101")
    assert omega_pair(R(1, 2)) == ("01", "10")
    assert omega_pair(R(1, 3)) == ("010", "100")


def test_composition_fixtures():
    assert compose_st((R(1, 2), R(1, 3))) == ("011001", "100101")
    assert compose_st((R(1, 2), R(1, 2))) == ("0110", "1001")
    assert compose_st(()) == ("0", "1")


@given(rotation_numbers(30))
def test_omega_pair_is_extreme_balanced_pair(r):
    lo, hi = omega_pair(r)
    q, p = r.denominator, r.numerator
    assert len(lo) == len(hi) == q
    assert lo.count("1") == hi.count("1") == p
    assert is_cyclically_balanced(lo) and is_cyclically_balanced(hi)
    rots = {lo[i:] + lo[:i] for i in range(q)}
    assert lo == max(w for w in rots if w[0] == "0")
    assert hi == min(w for w in rots if w[0] == "1")
    assert lo[2:] == hi[2:]


@given(rotation_numbers(30))
def test_complement_symmetry(r):
    lo, hi = omega_pair(r)
    assert omega_pair(1 - r) == (complement(hi), complement(lo))


@given(rotation_numbers(6), rotation_numbers(6), rotation_numbers(6))
def test_composition_is_iterated_substitution(r1, r2, r3):
    v = (r1, r2, r3)
    s, t = compose_st(v)
    assert s == substitute_many(v, "0") and t == substitute_many(v, "1")
    assert len(s) == len(t) == q_products(v)[-1]
    assert substitute(r1, "01") == "".join(omega_pair(r1))


def test_standard_words():
    assert standard_word(R(2, 5)) == "01010"
    assert standard_word(R(1, 3)) == "001"
    assert standard_word(R(1, 2)) == "01"
    with pytest.raises(ValueError):
        standard_word(R(2, 3))
    assert continued_fraction(R(3, 8)) == [2, 1, 2]


def test_cyclic_class_shift_offset():
    words, offset = cyclic_class(R(1, 3))
    assert words == ["001", "010", "100"] and offset == 1
    assert cyclic_class(R(2, 5))[1] == 2


@given(rotation_numbers(15))
def test_shift_acts_as_rotation_by_p(r):
    words, offset = cyclic_class(r)
    assert offset == r.numerator
    assert len(words) == r.denominator


def test_thue_morse_limit_word():
    tm = "".join(str(bin(n).count("1") % 2) for n in range(64))
    assert limit_word(repeat(R(1, 2)), 64) == tm
    assert limit_word(repeat(R(1, 2)), 64, side=1) == complement(tm)
    with pytest.raises(ValueError):
        limit_word([R(1, 2)], 100)


def test_characteristic_word_silver_ratio():
    w = characteristic_word(repeat(2), 500)
    assert is_balanced(w)
    assert abs(w.count("1") / len(w) - (2**0.5 - 1)) < 0.01
    # slope above 1/2 goes through the complement
    u = characteristic_word([1, 2, *repeat(2, 20)], 200)
    assert is_balanced(u) and u.count("1") > u.count("0")


def test_balance_and_parsing():
    assert not is_balanced("0011")
    assert is_balanced("0101")
    assert parse_rvector("1/2, 1/3") == (R(1, 2), R(1, 3))
    assert rotations(4) == [R(1, 2), R(1, 3), R(2, 3), R(1, 4), R(3, 4)]
    with pytest.raises(ValueError):
        rotation(1)
