"""Brute-force survivor oracle and the end-to-end hole classifier.

Everything here works with exact rationals.  The periodic census runs over
all points ``m / (2^p - 1)`` at once with numpy integer arrays: doubling is
a cyclic rotation of the ``p``-bit integer ``m``.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import cycle
from typing import Iterable

import numpy as np

from .renorm import Bridge, Limit, enumerate_plateaus, locate
from .sturmian import compose_st, limit_word, omega_pair, rotations
from .thresholds import ThresholdValue, chi, min_soch_length, phi, psi
from .words import doubling_step, inf, periodic, word_value

__all__ = [
    "Hole",
    "orbit_survives",
    "CycleCensus",
    "cycle_census",
    "GrowthEstimate",
    "growth_rate",
    "HoleReport",
    "hole_report",
    "VERDICTS",
    "boundary_curves",
    "to_uv",
    "limitset_membership_check",
    "route_chaos_rectangle",
    "interior_hole",
    "write_points_csv",
    "write_census_csv",
]

QUARTER, HALF, THREE_QUARTERS = Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)
VERDICTS = ("Trivial", "InfiniteCountable", "UncountableZeroDim", "PositiveDim", "Undetermined")
CHUNK = 1 << 22


@dataclass(frozen=True)
class Hole:
    """The open interval ``(a, b)``."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = Fraction(self.a), Fraction(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not 0 < a < b < 1:
            raise ValueError(f"need 0 < a < b < 1, got ({a}, {b})")

    def __contains__(self, x) -> bool:
        return self.a < x < self.b

    def reflect(self) -> Hole:
        """Image under ``x -> 1 - x``, which conjugates the map to itself."""
        return Hole(1 - self.b, 1 - self.a)


def orbit_survives(x, h: Hole) -> bool:
    """Does the orbit of the rational ``x`` avoid the open hole forever?"""
    x = Fraction(x)
    seen = set()
    while x not in seen:
        if x in h:
            return False
        seen.add(x)
        x = doubling_step(x)
    return True


def _rotate(m: np.ndarray, p: int, mask: int) -> np.ndarray:
    return ((m << np.uint64(1)) | (m >> np.uint64(p - 1))) & np.uint64(mask)


def _survivors(h: Hole, p: int) -> np.ndarray:
    """All ``m`` in ``[0, 2^p - 1]`` whose cycle ``m / (2^p - 1)`` misses the hole."""
    D = (1 << p) - 1
    # a < m/D < b  <=>  lo < m < hi
    lo = np.uint64(math.floor(h.a * D))
    hi = np.uint64(math.ceil(h.b * D))
    out = []
    for start in range(0, D + 1, CHUNK):
        cur = np.arange(start, min(start + CHUNK, D + 1), dtype=np.uint64)
        for _ in range(p):
            cur = cur[(cur <= lo) | (cur >= hi)]
            if not cur.size:
                break
            cur = _rotate(cur, p, D)
        out.append(cur)
    return np.concatenate(out)


def _primitive_count(m: np.ndarray, p: int) -> int:
    D = (1 << p) - 1
    keep = np.ones(m.size, dtype=bool)
    for d in range(1, p):
        if p % d == 0:
            r = m
            for _ in range(d):
                r = _rotate(r, p, D)
            keep &= r != m
    return int(keep.sum())


@dataclass(frozen=True)
class CycleCensus:
    """Surviving cycles by primitive period.  Period 1 holds the fixed points 0 and 1."""

    counts: dict[int, int]
    max_period: int

    @property
    def nontrivial(self) -> dict[int, int]:
        return {p: c for p, c in self.counts.items() if p > 1 and c}

    @property
    def periods(self) -> set[int]:
        return set(self.nontrivial)

    @property
    def is_trivial(self) -> bool:
        return not self.nontrivial

    def periodic_points(self, p: int) -> int:
        """Surviving points whose period divides ``p``."""
        return sum(d * c for d, c in self.counts.items() if p % d == 0)


def cycle_census(h: Hole, max_period: int = 20) -> CycleCensus:
    """Count surviving primitive cycles of each period ``p <= max_period``."""
    if max_period < 1:
        raise ValueError("max_period must be >= 1")
    counts = {1: int(orbit_survives(0, h)) + int(orbit_survives(1, h))}
    for p in range(2, max_period + 1):
        alive = _survivors(h, p)
        counts[p] = _primitive_count(alive, p) // p
    return CycleCensus(counts, max_period)


@dataclass(frozen=True)
class GrowthEstimate:
    """Heuristic growth of periodic survivors; not a dimension certificate.

    ``counts[p]`` is the number of surviving points fixed by ``T^p`` (0 and
    1 included).  ``window`` is the longest run of periods ending at
    ``max_period``, inside its upper half, on which some nontrivial
    periodic survivor exists; small periods are skipped because the counts
    there are dominated by arithmetic accidents.  ``slope`` is the
    least-squares slope of ``log2 counts[p]`` over the window (0 when it
    holds fewer than two periods).
    """

    counts: dict[int, int]
    window: tuple[int, int]
    slope: float
    census: CycleCensus

    @property
    def strictly_increasing(self) -> bool:
        lo, hi = self.window
        seq = [self.counts[p] for p in range(lo, hi + 1)]
        return len(seq) > 1 and all(x < y for x, y in zip(seq, seq[1:]))


def growth_rate(h: Hole, max_period: int = 20, census: CycleCensus | None = None) -> GrowthEstimate:
    if max_period < 4:
        raise ValueError("max_period must be >= 4")
    if census is None or census.max_period < max_period:
        census = cycle_census(h, max_period)
    counts = {p: census.periodic_points(p) for p in range(1, max_period + 1)}
    floor = -(-max_period // 2)
    lo = max_period + 1
    while lo > floor and counts[lo - 1] > counts[1]:
        lo -= 1
    lo = min(lo, max_period)
    ps = np.arange(lo, max_period + 1)
    slope = 0.0
    if ps.size >= 2:
        slope = float(np.polyfit(ps, np.log2([counts[p] for p in ps]), 1)[0])
    return GrowthEstimate(counts, (lo, max_period), slope, census)


@dataclass
class HoleReport:
    """Verdict for a hole, the rule that decided it and the oracle's evidence."""

    hole: Hole
    verdict: str
    basis: str
    thresholds: dict[str, ThresholdValue] = field(default_factory=dict)
    census: CycleCensus | None = None
    growth: GrowthEstimate | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def determinate(self) -> bool:
        return self.verdict != "Undetermined"

    @property
    def oracle_consistent(self) -> bool | None:
        """False only when the census contradicts the verdict outright."""
        if self.census is None:
            return None
        if self.verdict == "Trivial":
            return self.census.is_trivial
        return True

    def to_dict(self) -> dict:
        out = {
            "hole": {"a": str(self.hole.a), "b": str(self.hole.b)},
            "verdict": self.verdict,
            "basis": self.basis,
            "thresholds": {k: _threshold_dict(v) for k, v in self.thresholds.items()},
            "notes": self.notes,
        }
        if self.census is not None:
            out["oracle"] = {
                "max_period": self.census.max_period,
                "cycles": {str(p): c for p, c in sorted(self.census.counts.items())},
                "nontrivial_periods": sorted(self.census.periods),
                "consistent": self.oracle_consistent,
            }
        if self.growth is not None:
            out["oracle"]["growth"] = {
                "window": list(self.growth.window),
                "slope": round(self.growth.slope, 6),
                "heuristic": True,
            }
        return out


def _threshold_dict(th: ThresholdValue) -> dict:
    d = {"kind": th.kind, "lo": str(th.lo), "hi": str(th.hi), "basis": th.basis}
    if th.word is not None:
        d["word"] = str(th.word)
    return d


def _decide(h: Hole, q_max: int, n_max: int) -> tuple[str, str, dict, list]:
    a, b = h.a, h.b
    if a > HALF or b < HALF:
        return "PositiveDim", "hole inside one half of the circle: dimension is positive", {}, []
    if (a < QUARTER and b > HALF) or (a < HALF and b > THREE_QUARTERS):
        return "Trivial", "hole covers a cylinder [01] or [10]: only 0 and 1 survive", {}, []
    if a == HALF:
        # b in (1/2, 3/4]; the reflected hole has right end 1/2
        verdict, basis, th, notes = _decide(h.reflect(), q_max, n_max)
        return verdict, basis, th, notes + [f"decided on the reflected hole {h.reflect().a, h.reflect().b}"]
    if a <= QUARTER:
        if b > HALF:
            return "Trivial", "a = 1/4 and b > 1/2: only 0 and 1 survive", {}, []
        return "InfiniteCountable", "a <= 1/4 and b = 1/2: survivors end in 0^inf or 1^inf", {}, []

    th = {"phi": phi(a, q_max=q_max), "chi": chi(a, q_max=q_max, n_max=n_max), "psi": psi(a, q_max=q_max)}
    notes = []
    f, c = th["phi"], th["chi"]
    if b > f.hi or b > a + Fraction(1, 3):
        return "Trivial", "b > phi(a)", th, notes
    if b < c.lo or b < a + min_soch_length()[0]:
        return "PositiveDim", "b < chi(a)", th, notes
    if f.lo < b and not f.resolved:
        return "Undetermined", "phi(a) unresolved and b inside its bracket", th, notes
    if b > c.hi:
        basis = "chi(a) < b <= phi(a): countable and infinite"
    elif c.is_exact and b == c.value:
        basis = "b = chi(a) with a rational: countable and infinite"
    else:
        return "Undetermined", "chi(a) unresolved and b inside its bracket", th, notes
    p = th["psi"]
    if p.resolved:
        where = "infinite" if b < p.lo else "finite"
        notes.append(f"survivors in [2b-1, 2a] are {where} (psi(a) = {p.lo})")
    addr = locate(a, q_max=q_max, n_max=n_max)
    if isinstance(addr, (Bridge, Limit)):
        notes.append("a is on a bridge or limit locus; aperiodic survivors are invisible to the cycle census")
    return "InfiniteCountable", basis, th, notes


def hole_report(h: Hole, q_max: int = 64, n_max: int = 16, max_period: int = 12,
                oracle: bool = True) -> HoleReport:
    """Classify the hole from the threshold theory and attach the oracle's census.

    The survivor set is one of: only ``{0, 1}`` (Trivial), countably
    infinite, uncountable of zero dimension, or of positive dimension.  The
    zero-dimensional uncountable case needs an irrational ``a``, so it never
    occurs for the rational holes accepted here.
    """
    verdict, basis, th, notes = _decide(h, q_max, n_max)
    report = HoleReport(h, verdict, basis, th, notes=notes)
    if oracle:
        report.census = cycle_census(h, max_period)
        if max_period >= 4:
            report.growth = growth_rate(h, max_period, report.census)
        if report.oracle_consistent is False:
            report.notes.append("census contradicts the verdict")
    return report


def to_uv(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """``u = a + b``, ``v = 1/4 + b - a``."""
    return a + b, QUARTER + b - a


def _steps(plateaus, reflect: bool) -> list[tuple[Fraction, Fraction]]:
    pts = set()
    for lo, hi, val in plateaus:
        pts.update({(lo, val), (hi, val)})
        if reflect:
            pts.update({(1 - val, 1 - hi), (1 - val, 1 - lo)})
    return sorted(pts)


def boundary_curves(q_max: int = 7, n_max: int = 2, coords: str = "ab", inner_q_max: int | None = None,
                    roots=None, reflect: bool = True) -> dict[str, list[tuple[Fraction, Fraction]]]:
    """Step approximations of the boundaries of the two regions, sorted by ``a``.

    ``"d0"`` (survivors beyond {0, 1}) comes from the plateaus of ``phi``
    over rotations with ``q <= q_max``; ``"d1"`` (uncountable survivors) from
    the plateaus of ``chi`` down to ``n_max`` levels, with deeper rotations
    limited to ``inner_q_max`` and refined only under ``roots`` (see
    :func:`~doubling_holes.renorm.enumerate_plateaus`).  With ``reflect``
    each plateau is also mapped by ``(a, b) -> (1 - b, 1 - a)``, which fills
    in the vertical parts of the staircase.
    """
    if q_max < 2 or n_max < 1:
        raise ValueError("need q_max >= 2 and n_max >= 1")
    if coords not in ("ab", "uv"):
        raise ValueError(f"unknown coordinates {coords!r}")
    d0 = []
    for r in rotations(q_max):
        s, t = omega_pair(r)
        d0.append((word_value(inf(s)), word_value(periodic(s, t)), word_value(inf(t))))
    d1 = [(iv.lo_value, iv.hi_value, word_value(val))
          for _, iv, val in enumerate_plateaus(q_max, n_max, inner_q_max, roots)]
    curves = {"d0": _steps(d0, reflect), "d1": _steps(d1, reflect)}
    if coords == "uv":
        curves = {k: [to_uv(a, b) for a, b in pts] for k, pts in curves.items()}
    return curves


def _cycled(seq: Iterable):
    seq = list(seq) if not hasattr(seq, "__next__") else seq
    return cycle(seq) if isinstance(seq, list) else seq


def limitset_membership_check(v, exponents, depth: int = 64) -> bool:
    """Check that ``s_1^{i_1} s_2^{i_2} ...`` avoids ``(s(v), t(v))`` along all its shifts.

    Finite ``v`` and ``exponents`` are repeated periodically.  Only the
    first ``depth`` symbols are examined; a shift counts as a violation only
    when its visible part is strictly between the visible parts of the two
    limit words.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    rs, es = _cycled(v), _cycled(exponents)
    prefix, pieces, size = [], [], 0
    while size < depth:
        prefix.append(next(rs))
        e = next(es)
        if e < 1:
            raise ValueError("exponents must be >= 1")
        s, _ = compose_st(prefix)
        pieces.append(s * e)
        size += len(s) * e
    word = "".join(pieces)[:depth]
    vec = list(prefix)
    horizon = 2 * depth
    while len(compose_st(vec)[0]) < horizon:
        vec.append(next(rs))
    lo, hi = limit_word(vec, horizon, 0)[:depth], limit_word(vec, horizon, 1)[:depth]
    for j in range(depth):
        tail = word[j:]
        if lo[: len(tail)] < tail < hi[: len(tail)]:
            return False
    return True


def write_points_csv(path, points, coords: str = "ab") -> None:
    with open(path, "w", newline="") as fh:
        _write_points(fh, points, coords)


def _write_points(fh, points, coords: str) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["a", "b"] if coords == "ab" else ["u", "v"])
    for x, y in points:
        w.writerow([_num(x), _num(y)])


def write_census_csv(path, census: CycleCensus) -> None:
    with open(path, "w", newline="") as fh:
        _write_census(fh, census)


def _write_census(fh, census: CycleCensus) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["period", "count"])
    for p in sorted(census.counts):
        w.writerow([p, census.counts[p]])


def _num(x: Fraction) -> str:
    return str(x)


def route_chaos_rectangle(v, nxt: Fraction | None = None) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """``(a_lo, a_hi, b_lo, b_hi)``: holes strictly inside keep cycles of periods exactly ``Q_1, ..., Q_n``.

    With ``nxt`` this is ``(s_n^inf, s_{n+1}^inf) x (t_{n+1}^inf, t_n^inf)``
    for the vector ``v + (nxt,)``; such a hole contains ``s_{n+1}^inf`` and
    ``t_{n+1}^inf``, so the ``Q_{n+1}``-cycle is gone.  Without ``nxt`` it is
    the plateau rectangle ``(s^inf, s t s^inf) x (t s^inf, t^inf)`` of ``v``,
    the union of the former over all ``nxt``.
    """
    v = tuple(v)
    if not v:
        raise ValueError("empty rotation vector")
    s, t = compose_st(v)
    if nxt is None:
        return (word_value(inf(s)), word_value(periodic(s + t, s)),
                word_value(periodic(t, s)), word_value(inf(t)))
    s1, t1 = compose_st(v + (nxt,))
    return word_value(inf(s)), word_value(inf(s1)), word_value(inf(t1)), word_value(inf(t))


def interior_hole(v, nxt: Fraction | None = None) -> Hole:
    """The centre of :func:`route_chaos_rectangle`."""
    a_lo, a_hi, b_lo, b_hi = route_chaos_rectangle(v, nxt)
    return Hole((a_lo + a_hi) / 2, (b_lo + b_hi) / 2)
