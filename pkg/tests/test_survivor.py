import io
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from doubling_holes.survivor import (
    Hole, VERDICTS, _write_census, boundary_curves, cycle_census, growth_rate, hole_report, interior_hole,
    limitset_membership_check, orbit_survives, route_chaos_rectangle, to_uv, write_census_csv,
    write_points_csv,
)
from doubling_holes.sturmian import q_products
from doubling_holes.thresholds import phi
from strategies import fractions_in, holes

R = Fraction


def test_hole_validation():
    with pytest.raises(ValueError):
        Hole(R(1, 2), R(1, 3))
    with pytest.raises(ValueError):
        Hole(0, R(1, 2))
    assert R(1, 2) in Hole(R(1, 3), R(2, 3)) and R(1, 3) not in Hole(R(1, 3), R(2, 3))
    assert Hole(R(1, 10), R(1, 5)).reflect() == Hole(R(4, 5), R(9, 10))


def test_orbit_survives():
    assert orbit_survives(R(1, 3), Hole(R(1, 3), R(2, 3)))
    assert not orbit_survives(R(1, 3), Hole(R(1, 4), R(3, 4)))
    assert orbit_survives(0, Hole(R(1, 10), R(9, 10)))
    # 1/2 -> 1 under the branch convention, and 1 is fixed
    assert orbit_survives(R(1, 2), Hole(R(1, 10), R(2, 10)))
    assert not orbit_survives(R(1, 4), Hole(R(1, 3), R(3, 5)))


def test_census_examples():
    assert cycle_census(Hole(R(1, 3), R(2, 3)), 8).periods == {2}
    assert cycle_census(Hole(R(1, 5), R(4, 5)), 8).periods == set()
    assert cycle_census(Hole(R(7, 20), R(5, 8)), 12).periods == {2}
    # the 6-cycle through 25/63 and 37/63 falls into this hole
    assert cycle_census(Hole(R(7, 20), R(3, 5)), 12).periods == {2}
    assert cycle_census(Hole(R(1, 10), R(2, 10)), 1).counts == {1: 2}


@given(holes(40), st.integers(2, 8))
def test_census_matches_orbit_iteration(h, p):
    hole = Hole(*h)
    census = cycle_census(hole, p)
    D = 2**p - 1
    alive = [m for m in range(D + 1) if orbit_survives(R(m, D), hole)]
    assert census.periodic_points(p) == len(alive)


@pytest.mark.parametrize("v", [(R(1, 2),), (R(1, 3),), (R(1, 2), R(1, 3)), (R(2, 3), R(1, 2)), (R(1, 2), R(1, 2), R(1, 2))])
@pytest.mark.parametrize("nxt", [None, R(1, 2), R(1, 4), R(2, 3)])
def test_route_to_chaos(v, nxt):
    Qs = q_products(v)
    a_lo, a_hi, b_lo, b_hi = route_chaos_rectangle(v, nxt)
    assert a_lo < a_hi < b_lo < b_hi
    assert cycle_census(interior_hole(v, nxt), Qs[-1] + 4).periods == set(Qs)


def test_growth_examples():
    countable = growth_rate(Hole(R(1, 3), R(2, 3)), 16)
    assert countable.slope == 0
    assert growth_rate(Hole(R(3, 10), R(9, 20)), 16).slope > 0
    fat = growth_rate(Hole(R(1, 10), R(1, 5)), 16)
    assert fat.slope > 0 and fat.strictly_increasing
    with pytest.raises(ValueError):
        growth_rate(Hole(R(1, 3), R(2, 3)), 3)


@pytest.mark.parametrize("a, b, verdict", [
    (R(3, 10), R(7, 10), "Trivial"),
    (R(3, 10), R(71, 100), "Trivial"),
    (R(7, 20), R(5, 9), "PositiveDim"),
    (R(1, 3), R(7, 12), "InfiniteCountable"),
    (R(1, 3), R(2, 3), "InfiniteCountable"),
    (R(3, 10), R(9, 20), "PositiveDim"),
    (R(1, 10), R(3, 5), "Trivial"),
    (R(1, 5), R(1, 2), "InfiniteCountable"),
    (R(1, 4), R(3, 5), "Trivial"),
    (R(1, 2), R(4, 5), "InfiniteCountable"),
    (R(1, 2), R(3, 5), "PositiveDim"),
    (R(3, 5), R(7, 10), "PositiveDim"),
])
def test_hole_report_examples(a, b, verdict):
    report = hole_report(Hole(a, b), max_period=10)
    assert report.verdict == verdict
    assert report.oracle_consistent is not False
    assert report.to_dict()["verdict"] == verdict


def test_undetermined_when_budget_runs_out():
    a = R(5, 12) - R(1, 10**12)
    report = hole_report(Hole(a, R(3, 5) + R(1, 10**12)), q_max=8, n_max=2, oracle=False)
    assert report.verdict in VERDICTS
    assert not report.determinate


@given(holes(80))
def test_verdicts_respect_the_reflection(h):
    hole = Hole(*h)
    assert hole_report(hole, oracle=False).verdict == hole_report(hole.reflect(), oracle=False).verdict


@given(fractions_in(R(1, 4), R(1, 2), 300), st.integers(1, 50))
def test_beyond_phi_only_fixed_points_survive(a, k):
    f = phi(a)
    b = f.hi + R(k, 1000)
    if b >= 1:
        return
    hole = Hole(a, b)
    assert hole_report(hole, oracle=False).verdict == "Trivial"
    assert cycle_census(hole, 10).is_trivial
    assert not any(orbit_survives(R(m, n), hole) for n in range(2, 64) for m in range(1, n))


def test_boundary_curves():
    small = boundary_curves(2, 1)
    assert (R(1, 3), R(7, 12)) in small["d1"] and (R(1, 3), R(2, 3)) in small["d0"]
    assert to_uv(R(1, 3), R(7, 12)) == (R(11, 12), R(1, 2))
    uv = boundary_curves(2, 1, coords="uv")
    assert (R(11, 12), R(1, 2)) in uv["d1"]
    for pts in boundary_curves(6, 2, inner_q_max=3).values():
        assert all(p[1] <= q[1] for p, q in zip(pts, pts[1:]))
    with pytest.raises(ValueError):
        boundary_curves(2, 1, coords="xy")


def test_limit_set_membership():
    assert limitset_membership_check([R(1, 2)], [1], 64)
    assert limitset_membership_check([R(1, 2), R(1, 3)], [2, 1], 64)
    assert limitset_membership_check([R(1, 2)], [1], 1)
    with pytest.raises(ValueError):
        limitset_membership_check([R(1, 2)], [0], 8)


def test_csv_output(tmp_path):
    path = tmp_path / "curve.csv"
    write_points_csv(path, [(R(1, 3), R(7, 12))])
    assert path.read_text() == "a,b\n1/3,7/12\n"
    write_points_csv(path, [(R(11, 12), R(1, 2))], coords="uv")
    assert path.read_text().splitlines()[0] == "u,v"
    census = cycle_census(Hole(R(1, 3), R(2, 3)), 3)
    write_census_csv(tmp_path / "c.csv", census)
    assert (tmp_path / "c.csv").read_text() == "period,count\n1,2\n2,1\n3,0\n"
    buf = io.StringIO()
    _write_census(buf, census)
    assert buf.getvalue().startswith("period,count")
