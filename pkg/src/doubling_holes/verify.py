"""Self-check suites run by ``doubling-holes verify``.

Each suite returns a list of :class:`Check` rows; a suite passes when every
row does.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .extremal import is_extremal, reflection_check, shift_avoidance, substitution_closure_check
from .ifs import attractor_dimension, measure_identity_check
from .renorm import delta_interval, sn_tn_interval_length, tilde_delta_interval, totient_sum_check
from .sturmian import compose_st, omega_pair, q_products, rotations
from .survivor import cycle_census, interior_hole
from .thresholds import min_soch_length, thue_morse_constant

__all__ = ["Check", "SUITES", "run_suite", "vectors"]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def vectors(Q_max: int, q_max: int | None = None, prefix=(), Q: int = 1):
    """Every rotation vector with product of denominators ``<= Q_max`` (each ``q <= q_max``)."""
    cap = Q_max // Q if q_max is None else min(q_max, Q_max // Q)
    for r in rotations(cap):
        v = prefix + (r,)
        yield v
        yield from vectors(Q_max, q_max, v, Q * r.denominator)


def _brackets(partial: Fraction, tail: Fraction, target: Fraction) -> bool:
    return partial <= target <= partial + tail


def identities(q_max: int = 40) -> list[Check]:
    p, t = totient_sum_check(q_max)
    m, u = measure_identity_check(q_max)
    dim = attractor_dimension(Fraction(1, 10**7))
    tm_lo, tm_hi = thue_morse_constant(64)
    c_lo, c_hi = min_soch_length(64)
    return [
        Check("level-one lengths sum to 1/4", _brackets(p, t, Fraction(1, 4)), f"tail <= {float(t):.2e}"),
        Check("IFS weights sum to 1", _brackets(m, u, Fraction(1)), f"tail <= {float(u):.2e}"),
        Check("attractor dimension near 0.473223", dim.contains(Fraction("0.473223")), str(dim)),
        Check("Thue-Morse constant near 0.412454", abs((tm_lo + tm_hi) / 2 - Fraction("0.412454")) < Fraction(1, 10**6),
              f"{float(tm_lo):.9f}"),
        Check("1 - 2a* from product and word agree", abs((c_lo + c_hi) / 2 - (1 - tm_lo - tm_hi)) < Fraction(1, 2**60),
              f"{float(c_lo):.9f}"),
    ]


def extremal(q_max: int = 10, Q_max: int = 64, closure_q: int = 6) -> list[Check]:
    out = []
    pairs = [omega_pair(r) for r in rotations(q_max)] + [compose_st(v) for v in vectors(Q_max)]
    for name, fn in (("is_extremal", is_extremal), ("shift_avoidance", shift_avoidance),
                     ("reflection_check", reflection_check)):
        bad = [p for p in pairs if not fn(*p)]
        out.append(Check(f"{name} on {len(pairs)} pairs", not bad, f"first failure {bad[0]}" if bad else ""))
    small = [omega_pair(r) for r in rotations(closure_q)]
    bad = [(o, i) for o in small for i in small if not substitution_closure_check(o, i)]
    out.append(Check(f"substitution closure on {len(small) ** 2} pairs", not bad,
                     f"first failure {bad[0]}" if bad else ""))
    return out


def tower(q_max: int = 4, Q_max: int = 64) -> list[Check]:
    nest, disjoint, length = [], [], []
    for v in [()] + list(vectors(Q_max, q_max)):
        Q = q_products(v)[-1] if v else 1
        kids = [v + (r,) for r in rotations(min(q_max, Q_max // Q))]
        if v:
            outer = tilde_delta_interval(v)
            nest += [k for k in kids if not delta_interval(k).issubset(outer)]
            try:
                sn_tn_interval_length(v)
            except AssertionError:
                length.append(v)
        boxes = [delta_interval(k) for k in kids]
        disjoint += [(x, y) for (x, bx), (y, by) in combinations(zip(kids, boxes), 2) if not bx.isdisjoint(by)]
    return [
        Check("children nest in the parent interval", not nest, str(nest[:1])),
        Check("siblings are pairwise disjoint", not disjoint, str(disjoint[:1])),
        Check("length formula for [s^inf, t^inf]", not length, str(length[:1])),
    ]


def oracle(Q_max: int = 12) -> list[Check]:
    bad, n = [], 0
    for v in vectors(Q_max):
        Qs = q_products(v)
        for nxt in (None, Fraction(1, 2), Fraction(1, 3)):
            n += 1
            got = cycle_census(interior_hole(v, nxt), Qs[-1] + 4).periods
            if got != set(Qs):
                bad.append((v, nxt, sorted(got)))
    return [Check(f"cycle periods match Q_1..Q_n on {n} holes", not bad, str(bad[:1]))]


SUITES = {"identities": identities, "extremal": extremal, "tower": tower, "oracle": oracle}


def run_suite(name: str) -> list[Check]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name]()
