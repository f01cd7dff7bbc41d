"""The renormalisation tower of intervals and the descent classifier ``locate``.

For a vector ``v = (r_1, ..., r_n)`` with words ``(s, t) = compose_st(v)``::

    delta(v)       = [s^inf,       s t^inf]
    plateau(v)     = [s^inf,       s t s^inf]
    tilde_delta(v) = [s t s^inf,   s t^inf]

``delta(v + (r,))`` sits inside ``tilde_delta(v)`` for every ``r`` and these
are ordered by ``r``.  A point ``a`` in ``(1/4, 1/2)`` is located by
descending the tower until it lands on a plateau.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, cycle, islice
from math import prod
from typing import Iterator, Union

from .sturmian import characteristic_word, compose_st, limit_word, q_products, rotations, substitute_many
from .words import PeriodicPoint, finite_value, inf, periodic, word_value

__all__ = [
    "IntervalX",
    "delta_interval",
    "tilde_delta_interval",
    "plateau_interval",
    "sn_tn_interval_length",
    "totient",
    "totient_sum_check",
    "BridgePoint",
    "LimitPoint",
    "Plateau",
    "Bridge",
    "Limit",
    "Unresolved",
    "Address",
    "locate",
    "locate_level",
    "enumerate_plateaus",
    "word_bracket",
]

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class IntervalX:
    """Closed interval with eventually periodic endpoints."""

    lo: PeriodicPoint
    hi: PeriodicPoint

    def __post_init__(self):
        if not self.lo_value < self.hi_value:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def lo_value(self) -> Fraction:
        return word_value(self.lo)

    @property
    def hi_value(self) -> Fraction:
        return word_value(self.hi)

    @property
    def length(self) -> Fraction:
        return self.hi_value - self.lo_value

    def __contains__(self, x) -> bool:
        return self.lo_value <= x <= self.hi_value

    def issubset(self, other: IntervalX) -> bool:
        return other.lo_value <= self.lo_value and self.hi_value <= other.hi_value

    def isdisjoint(self, other: IntervalX) -> bool:
        return self.hi_value < other.lo_value or other.hi_value < self.lo_value


def delta_interval(v) -> IntervalX:
    s, t = compose_st(v)
    return IntervalX(inf(s), periodic(s, t))


def tilde_delta_interval(v) -> IntervalX:
    s, t = compose_st(v)
    return IntervalX(periodic(s + t, s), periodic(s, t))


def plateau_interval(v) -> IntervalX:
    s, t = compose_st(v)
    return IntervalX(inf(s), periodic(s + t, s))


def sn_tn_interval_length(v) -> Fraction:
    """Length of ``[s_n^inf, t_n^inf]`` from the product formula.

    ``prod_{j<n}(1 - 2^-Q_j) / (4 (1 - 2^-Q_n))``, checked against the
    endpoint values.
    """
    qs = q_products(v)
    length = prod((1 - Fraction(1, 2**q) for q in qs[:-1]), start=QUARTER) / (1 - Fraction(1, 2 ** qs[-1]))
    s, t = compose_st(v)
    direct = word_value(inf(t)) - word_value(inf(s))
    assert length == direct, (v, length, direct)
    return length


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def totient_sum_check(q_max: int) -> tuple[Fraction, Fraction]:
    """Partial sum of ``phi(q) / (4(2^q - 1))`` over ``2 <= q <= q_max`` and a tail bound.

    The total over all ``q`` is 1/4 (the level-one intervals tile (1/4, 1/2)
    up to a null set).  With ``phi(q) <= q`` and ``2^q - 1 >= 2^(q-1)`` the
    tail is at most ``(q_max + 2) / 2^(q_max + 1)``.
    """
    if q_max < 2:
        raise ValueError("q_max must be >= 2")
    partial = sum(Fraction(totient(q), 4 * (2**q - 1)) for q in range(2, q_max + 1))
    tail = Fraction(q_max + 2, 2 ** (q_max + 1))
    return partial, tail


def word_bracket(word: str) -> tuple[Fraction, Fraction]:
    """Values of every infinite word starting with ``word``."""
    lo = finite_value(word)
    return lo, lo + Fraction(1, 2 ** len(word))


@dataclass(frozen=True)
class BridgePoint:
    """A point of a bridge set: ``rho_v(0 1 c)`` with ``c`` a characteristic word.

    ``prefix`` is ``(r_1, ..., r_{n-1})`` (empty for the level-one set
    between the ``delta(r)``), and the irrational slope of ``c`` is the
    quadratic irrational ``[0; cf_head..., cf_period, cf_period, ...]``.
    Such points are never rational, so they can only be given symbolically.
    """

    prefix: tuple[Fraction, ...] = ()
    cf_head: tuple[int, ...] = ()
    cf_period: tuple[int, ...] = (2,)

    def __post_init__(self):
        if not self.cf_period or min(self.cf_head + self.cf_period) < 1:
            raise ValueError("partial quotients must be positive and the period non-empty")

    @property
    def level(self) -> int:
        return len(self.prefix) + 1

    def quotients(self) -> Iterator[int]:
        return chain(self.cf_head, cycle(self.cf_period))

    def _word(self, lead: str, min_len: int) -> str:
        q = prod(r.denominator for r in self.prefix)
        c = characteristic_word(self.quotients(), max(1, -(-min_len // q) - 2))
        return substitute_many(self.prefix, lead + c)

    def word(self, min_len: int) -> str:
        """Prefix of the expansion of the point."""
        return self._word("01", min_len)

    def chi_word(self, min_len: int) -> str:
        """Prefix of ``rho_v(1 0 c)``, the critical value over this point."""
        return self._word("10", min_len)

    def bracket(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        return word_bracket(self.word(bits))


@dataclass(frozen=True)
class LimitPoint:
    """The limit word ``s(v)`` (side 0) or ``t(v)`` (side 1) of an eventually periodic vector."""

    head: tuple[Fraction, ...] = ()
    period: tuple[Fraction, ...] = (Fraction(1, 2),)
    side: int = 0

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be non-empty")

    def vector(self, n: int | None = None):
        v = chain(self.head, cycle(self.period))
        return v if n is None else tuple(islice(v, n))

    def word(self, min_len: int) -> str:
        return limit_word(self.vector(), min_len, self.side)

    def bracket(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        return word_bracket(self.word(bits))


@dataclass(frozen=True)
class Plateau:
    """``a`` lies in ``[s_n^inf, s_n t_n s_n^inf]``."""

    vector: tuple[Fraction, ...]

    @property
    def level(self) -> int:
        return len(self.vector)


@dataclass(frozen=True)
class Bridge:
    """``a`` lies in the level-``level`` bridge set below ``prefix``.

    For rational input this only happens at the right end ``s t^inf`` of a
    tower interval, the degenerate end of the bridge set.
    """

    level: int
    prefix: tuple[Fraction, ...]


@dataclass(frozen=True)
class Limit:
    """``a`` is the limit word of an infinite vector; ``prefix`` is its first ``depth`` entries."""

    prefix: tuple[Fraction, ...]
    depth: int


@dataclass(frozen=True)
class Unresolved:
    """Search bounds ran out.  ``prefix`` is the part of the address found so far."""

    depth: int
    prefix: tuple[Fraction, ...]
    reason: str


Address = Union[Plateau, Bridge, Limit, Unresolved]


def _stern_brocot(v: tuple[Fraction, ...], a: Fraction, q_max: int) -> Fraction | None:
    # delta(v + (r,)) moves right as r grows, so binary-search the Farey tree
    lp, lq, hp, hq = 0, 1, 1, 1
    while True:
        p, q = lp + hp, lq + hq
        if q > q_max:
            return None
        r = Fraction(p, q)
        s, t = compose_st(v + (r,))
        if a < word_value(inf(s)):
            hp, hq = p, q
        elif a > word_value(periodic(s, t)):
            lp, lq = p, q
        else:
            return r


def locate_level(a: Fraction, q_max: int = 64) -> Fraction | None:
    """The ``r`` with ``a`` in ``delta(r)`` (level one only), if its denominator is <= q_max."""
    return _stern_brocot((), Fraction(a), q_max)


def locate(a, q_max: int = 64, n_max: int = 16, max_len: int = 1 << 16) -> Address:
    """Classify ``a`` in ``(1/4, 1/2)`` by descending the tower.

    Rational ``a`` ends on a plateau, or on the right end of some
    ``tilde_delta(v)`` (reported as a :class:`Bridge`), or as
    :class:`Unresolved` when ``q_max``, ``n_max`` or the word-length cap
    ``max_len`` is exceeded.  Symbolic points report their own address.
    """
    if isinstance(a, BridgePoint):
        return Bridge(a.level, a.prefix)
    if isinstance(a, LimitPoint):
        if a.side != 0:
            raise ValueError("t(v) is not in (1/4, 1/2)")
        return Limit(a.vector(n_max), n_max)
    a = Fraction(a)
    if not QUARTER < a < HALF:
        raise ValueError(f"{a} is outside (1/4, 1/2)")
    v: tuple[Fraction, ...] = ()
    for level in range(1, n_max + 1):
        if v and len(compose_st(v)[0]) * 2 > max_len:
            return Unresolved(level, v, "word length cap")
        r = _stern_brocot(v, a, q_max)
        if r is None:
            return Unresolved(level, v, f"no rotation with q <= {q_max}")
        v = v + (r,)
        s, t = compose_st(v)
        if a <= word_value(periodic(s + t, s)):
            return Plateau(v)
        if a == word_value(periodic(s, t)):
            return Bridge(level + 1, v)
    return Unresolved(n_max + 1, v, f"depth > {n_max}")


def enumerate_plateaus(q_max: int, n_max: int, inner_q_max: int | None = None,
                       roots=None) -> list[tuple[tuple[Fraction, ...], IntervalX, PeriodicPoint]]:
    """All ``(v, plateau(v), t s^inf)`` with ``len(v) <= n_max``, sorted by left end.

    Level-one rotations have ``q <= q_max``; deeper ones ``q <= inner_q_max``
    (default ``q_max``).  ``roots`` optionally restricts which level-one
    boxes are refined further.
    """
    inner = q_max if inner_q_max is None else inner_q_max
    out = []

    def visit(v):
        s, t = compose_st(v)
        out.append((v, IntervalX(inf(s), periodic(s + t, s)), periodic(t, s)))
        if len(v) < n_max and (len(v) > 1 or roots is None or v[0] in roots):
            for r in rotations(inner):
                visit(v + (r,))

    for r in rotations(q_max):
        visit((r,))
    out.sort(key=lambda item: item[1].lo_value)
    return out
