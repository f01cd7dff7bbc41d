"""Binary words, eventually periodic expansions and the doubling map.

Finite words are plain ``str`` objects over the alphabet ``"01"``.  Infinite
words that matter here are eventually periodic and are held as
:class:`PeriodicPoint` (a preperiod followed by a repeated cycle).  Real
numbers are :class:`fractions.Fraction`; nothing in this module touches
floating point.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import lcm

__all__ = [
    "PeriodicPoint",
    "periodic",
    "inf",
    "word_value",
    "finite_value",
    "rational_to_expansion",
    "lex_cmp",
    "shift",
    "doubling_step",
    "complement",
    "primitive_root",
    "parse_point",
    "format_point",
]

_FLIP = str.maketrans("01", "10")
_POINT_RE = re.compile(r"^0\.([01]*)\(([01]+)\)$")


def complement(w: str) -> str:
    """Flip every symbol: 0 <-> 1."""
    return w.translate(_FLIP)


def primitive_root(w: str) -> str:
    """Shortest ``u`` with ``w == u * k``."""
    n = len(w)
    # smallest period dividing n
    i = (w + w).find(w, 1)
    if 0 < i < n and n % i == 0:
        return w[:i]
    return w


def finite_value(w: str) -> Fraction:
    """Value of the finite expansion ``0.w`` (i.e. ``w 0^inf``)."""
    if not w:
        return Fraction(0)
    return Fraction(int(w, 2), 1 << len(w))


def _canonical(pre: str, cyc: str) -> tuple[str, str]:
    if not cyc:
        raise ValueError("cycle must be non-empty")
    if set(pre + cyc) - {"0", "1"}:
        raise ValueError(f"not a binary word: {pre!r}, {cyc!r}")
    cyc = primitive_root(cyc)
    # absorb trailing preperiod symbols into the cycle
    while pre and pre[-1] == cyc[-1]:
        pre = pre[:-1]
        cyc = cyc[-1] + cyc[:-1]
    return pre, cyc


@total_ordering
@dataclass(frozen=True, init=False)
class PeriodicPoint:
    """The infinite word ``pre cyc cyc cyc ...`` in canonical form.

    Canonical means the cycle is primitive and the preperiod is as short as
    possible, so two points are equal exactly when the sequences are equal.
    Ordering is lexicographic on the sequences, which agrees with the order
    of values except for the two expansions of a dyadic rational.
    """

    pre: str
    cyc: str

    def __init__(self, pre: str, cyc: str):
        pre, cyc = _canonical(pre, cyc)
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "cyc", cyc)

    @property
    def value(self) -> Fraction:
        return word_value(self)

    @property
    def is_purely_periodic(self) -> bool:
        return not self.pre

    @property
    def has_dual(self) -> bool:
        """True if the same real number has a second binary expansion."""
        if self.cyc == "0":
            return "1" in self.pre
        if self.cyc == "1":
            return "0" in self.pre
        return False

    def dual(self) -> PeriodicPoint:
        """The other expansion of a dyadic rational (``...10^inf <-> ...01^inf``)."""
        if not self.has_dual:
            raise ValueError(f"{self} has a unique expansion")
        k = len(self.pre) - 1
        flipped = self.pre[:k] + complement(self.pre[k])
        return PeriodicPoint(flipped, complement(self.cyc))

    def prefix(self, n: int) -> str:
        """First ``n`` symbols."""
        if n <= len(self.pre):
            return self.pre[:n]
        rest = n - len(self.pre)
        reps = -(-rest // len(self.cyc))
        return (self.pre + self.cyc * reps)[:n]

    def symbol(self, i: int) -> str:
        """0-based ``i``-th symbol."""
        if i < len(self.pre):
            return self.pre[i]
        return self.cyc[(i - len(self.pre)) % len(self.cyc)]

    def __lt__(self, other: PeriodicPoint) -> bool:
        return lex_cmp(self, other) < 0

    def __str__(self) -> str:
        return format_point(self)

    def __repr__(self) -> str:
        return f"PeriodicPoint({format_point(self)!r})"


def periodic(pre: str, cyc: str) -> PeriodicPoint:
    return PeriodicPoint(pre, cyc)


def inf(w: str) -> PeriodicPoint:
    """``w^inf``."""
    return PeriodicPoint("", w)


def word_value(p: PeriodicPoint) -> Fraction:
    """Sum of ``w_n 2^-n`` with the periodic tail summed in closed form."""
    k = len(p.pre)
    head = Fraction(int(p.pre, 2) if p.pre else 0, 1 << k)
    tail = Fraction(int(p.cyc, 2), (1 << len(p.cyc)) - 1)
    return head + tail / (1 << k)


def rational_to_expansion(x: Fraction) -> PeriodicPoint:
    """Canonical eventually periodic expansion of ``x`` in ``[0, 1]``.

    Dyadic rationals come back with the ``0^inf`` tail; the result's
    ``has_dual`` flag is then set and ``dual()`` gives the ``1^inf`` form.
    ``1`` itself is ``0.(1)``.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"{x} is outside [0, 1]")
    if x == 1:
        return PeriodicPoint("", "1")
    num, den = x.numerator, x.denominator
    seen: dict[int, int] = {}
    digits: list[str] = []
    while num not in seen:
        seen[num] = len(digits)
        num *= 2
        if num >= den:
            digits.append("1")
            num -= den
        else:
            digits.append("0")
    start = seen[num]
    word = "".join(digits)
    return PeriodicPoint(word[:start], word[start:])


def lex_cmp(u: PeriodicPoint, v: PeriodicPoint) -> int:
    """-1, 0 or 1 as ``u`` precedes, equals or follows ``v`` lexicographically.

    Past ``max(|pre|) + lcm(|cyc|)`` symbols both sequences are periodic
    with a common period, so that horizon decides the comparison.
    """
    if u.pre == v.pre and u.cyc == v.cyc:
        return 0
    horizon = max(len(u.pre), len(v.pre)) + lcm(len(u.cyc), len(v.cyc))
    a, b = u.prefix(horizon), v.prefix(horizon)
    return (a > b) - (a < b)


def shift(p: PeriodicPoint, k: int = 1) -> PeriodicPoint:
    """Drop the first ``k`` symbols."""
    if k < 0:
        raise ValueError("shift count must be non-negative")
    if k <= len(p.pre):
        return PeriodicPoint(p.pre[k:], p.cyc)
    j = (k - len(p.pre)) % len(p.cyc)
    return PeriodicPoint("", p.cyc[j:] + p.cyc[:j])


def doubling_step(x: Fraction) -> Fraction:
    """``T(x) = 2x`` on ``[0, 1/2]`` and ``2x - 1`` on ``(1/2, 1]``; ``T(1/2) = 1``."""
    if not 0 <= x <= 1:
        raise ValueError(f"{x} is outside [0, 1]")
    y = 2 * x
    return y if x <= Fraction(1, 2) else y - 1


def parse_point(text: str) -> PeriodicPoint:
    """Parse ``0.PRE(CYC)``, e.g. ``0.10(01)``."""
    m = _POINT_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed word literal {text!r}; expected 0.PRE(CYC)")
    return PeriodicPoint(m.group(1), m.group(2))


def format_point(p: PeriodicPoint) -> str:
    return f"0.{p.pre}({p.cyc})"
