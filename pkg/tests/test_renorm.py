from fractions import Fraction
from itertools import combinations, islice

import pytest
from hypothesis import given, strategies as st

from doubling_holes.renorm import (
    Bridge, BridgePoint, IntervalX, Limit, LimitPoint, Plateau, Unresolved, delta_interval, enumerate_plateaus,
    locate, locate_level, plateau_interval, sn_tn_interval_length, tilde_delta_interval, totient,
    totient_sum_check, word_bracket,
)
from doubling_holes.sturmian import compose_st, q_products, rotations
from doubling_holes.words import inf, periodic, word_value
from strategies import fractions_in, rotation_numbers

R = Fraction
HALF = (R(1, 2),)


def test_first_intervals():
    d = delta_interval(HALF)
    assert (d.lo_value, d.hi_value) == (R(1, 3), R(5, 12))
    assert tilde_delta_interval(HALF).lo_value == R(19, 48)
    assert plateau_interval(HALF).hi_value == R(19, 48)
    d2 = delta_interval((R(1, 2), R(1, 3)))
    assert (d2.lo_value, d2.hi_value) == (R(25, 63), R(403, 1008))
    assert d2.issubset(tilde_delta_interval(HALF))


def test_length_formula_examples():
    assert sn_tn_interval_length(HALF) == R(1, 3)
    assert sn_tn_interval_length((R(1, 3),)) == R(2, 7)
    assert sn_tn_interval_length((R(1, 2), R(1, 3))) == R(4, 21)


@given(rotation_numbers(5), rotation_numbers(5), rotation_numbers(5))
def test_tower_nests_and_lengths_agree(r1, r2, r3):
    v = (r1, r2, r3)
    for k in range(1, 3):
        assert delta_interval(v[: k + 1]).issubset(tilde_delta_interval(v[:k]))
    sn_tn_interval_length(v)


@given(rotation_numbers(5), rotation_numbers(6), rotation_numbers(6))
def test_siblings_are_disjoint_and_ordered(r1, r2, r3):
    if r2 == r3:
        return
    x, y = delta_interval((r1, r2)), delta_interval((r1, r3))
    assert x.isdisjoint(y)
    assert (x.lo_value < y.lo_value) == (r2 < r3)


def test_nested_length_ratio():
    # |tilde_delta(v)| = 4^-Q_n (t_n^inf - s_n^inf)
    for v in [HALF, (R(1, 2), R(1, 3)), (R(1, 3), R(1, 2), R(2, 3))]:
        Q = q_products(v)[-1]
        assert tilde_delta_interval(v).length == R(1, 4**Q) * sn_tn_interval_length(v)


def test_totient_identity():
    assert [totient(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]
    assert totient_sum_check(2) == (R(1, 12), R(4, 8))
    assert totient_sum_check(3)[0] == R(13, 84)
    partial, tail = totient_sum_check(40)
    assert partial < R(1, 4) <= partial + tail and tail < R(1, 10**9)


@pytest.mark.parametrize("a, expected", [
    (R(1, 3), Plateau(HALF)),
    (R(7, 20), Plateau(HALF)),
    (R(19, 48), Plateau(HALF)),
    (R(25, 63), Plateau((R(1, 2), R(1, 3)))),
    (R(3, 10), Plateau((R(1, 3),))),
    (R(2, 7), Plateau((R(1, 3),))),
    (R(5, 12), Bridge(2, HALF)),
])
def test_locate_examples(a, expected):
    assert locate(a) == expected


def test_locate_limits():
    assert isinstance(locate(R(5, 12) - R(1, 10**9), q_max=8, n_max=2), Unresolved)
    assert locate_level(R(1, 3)) == R(1, 2)
    assert locate(BridgePoint()) == Bridge(1, ())
    assert locate(LimitPoint(), n_max=3) == Limit(HALF * 3, 3)
    with pytest.raises(ValueError):
        locate(R(1, 5))


@given(fractions_in(R(1, 4), R(1, 2), 3000))
def test_locate_lands_where_it_says(a):
    addr = locate(a)
    if isinstance(addr, Plateau):
        assert a in plateau_interval(addr.vector)
        for k in range(1, addr.level):
            assert a in tilde_delta_interval(addr.vector[:k])
    elif isinstance(addr, Bridge):
        s, t = compose_st(addr.prefix)
        assert a == word_value(periodic(s, t))


def test_rational_right_ends_are_degenerate_bridge_points():
    for v in [HALF, (R(1, 3),), (R(1, 2), R(2, 3))]:
        s, t = compose_st(v)
        assert locate(word_value(periodic(s, t))) == Bridge(len(v) + 1, v)


def test_enumerate_plateaus_sorted_and_disjoint():
    rows = enumerate_plateaus(6, 2, inner_q_max=3)
    ivs = [iv for _, iv, _ in rows]
    assert all(x.hi_value < y.lo_value for x, y in zip(ivs, ivs[1:]))
    assert all(word_value(val) == word_value(periodic(*reversed(compose_st(v)))) for v, _, val in rows)
    only = enumerate_plateaus(4, 2, roots={R(1, 2)})
    assert {v[0] for v, _, _ in only if len(v) == 2} == {R(1, 2)}


def test_bridge_points_sit_in_gaps():
    bits = 400
    for cf_head in [(), (1,), (3, 1)]:
        lo, hi = BridgePoint(cf_head=cf_head).bracket(bits)
        for r in rotations(20):
            d = delta_interval((r,))
            assert hi < d.lo_value or lo > d.hi_value
    lo, hi = BridgePoint(prefix=HALF).bracket(bits)
    assert lo in tilde_delta_interval(HALF)
    for r in rotations(10):
        d = delta_interval((R(1, 2), r))
        assert hi < d.lo_value or lo > d.hi_value


def test_limit_point_is_inside_every_level():
    lo, hi = LimitPoint().bracket(256)
    for n in range(1, 7):
        assert lo in delta_interval(HALF * n)
    assert LimitPoint(period=(R(1, 2), R(1, 3))).vector(3) == (R(1, 2), R(1, 3), R(1, 2))
    with pytest.raises(ValueError):
        BridgePoint(cf_period=())


def test_interval_helpers():
    with pytest.raises(ValueError):
        IntervalX(inf("10"), inf("01"))
    assert word_bracket("01") == (R(1, 4), R(1, 2))
