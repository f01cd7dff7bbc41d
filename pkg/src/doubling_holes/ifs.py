"""The countable iterated function system ``{F_r}`` and its attractor.

``F_r`` acts on expansions by the substitution ``rho_r``.  The attractor's
dimension ``s`` solves ``sum_{q>=2} phi(q) 4^(-q s) = 1`` (``phi`` being
Euler's totient); it is bracketed here by bisection with interval
arithmetic and an explicit tail bound.
"""
from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from itertools import cycle, product
from typing import Iterable

from mpmath import iv, libmp

from .renorm import totient, word_bracket
from .sturmian import limit_word, substitute
from .words import PeriodicPoint, periodic

__all__ = [
    "apply_F",
    "phi_limit",
    "DimensionSolution",
    "dimension_sum",
    "attractor_dimension",
    "measure_identity_check",
    "image_complexity",
]


def apply_F(r: Fraction, w):
    """``F_r`` on a finite word or an eventually periodic point (cycle length grows by ``q``)."""
    if isinstance(w, PeriodicPoint):
        return periodic(substitute(r, w.pre), substitute(r, w.cyc))
    return substitute(r, w)


def phi_limit(v: Iterable[Fraction], side: int = 0, precision: Fraction = Fraction(1, 2**64)
              ) -> tuple[Fraction, Fraction]:
    """Bracket of width <= ``precision`` around ``lim F_{r_1} ... F_{r_n}(x)``.

    ``side=0`` is the limit for ``x < 1/2`` (the limit word ``s(v)``),
    ``side=1`` for ``x > 1/2`` (``t(v)``).  A finite ``v`` is repeated.
    """
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    if isinstance(v, (list, tuple)):
        v = cycle(v)
    bits = max(1, (precision.denominator // precision.numerator).bit_length())
    return word_bracket(limit_word(v, bits, side))


@dataclass(frozen=True)
class DimensionSolution:
    """``lo <= s <= hi`` for the root of the dimension equation.

    ``residual_bound`` is the largest tail bound used (the series beyond
    ``q_truncation`` terms).
    """

    lo: Fraction
    hi: Fraction
    residual_bound: Fraction
    q_truncation: int

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def __str__(self) -> str:
        mid = (self.lo + self.hi) / 2
        return f"{float(mid):.9f} +/- {float(self.width / 2):.1e}"


@contextmanager
def _precision(bits: int):
    old = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = old


def _exact(x) -> tuple[Fraction, Fraction]:
    lo, hi = x._mpi_
    return Fraction(*libmp.to_rational(lo)), Fraction(*libmp.to_rational(hi))


def dimension_sum(s: Fraction, q_max: int = 256, prec: int = 128) -> tuple[Fraction, Fraction]:
    """Rigorous bounds on ``sum_{q>=2} phi(q) 4^(-q s)`` for ``s > 0``.

    The sum up to ``q_max`` uses outward-rounded interval arithmetic; the
    rest is bounded with ``phi(q) <= q``:
    ``sum_{q>Q} q x^q = x^(Q+1) ((Q+1) - Q x) / (1-x)^2`` with ``x = 4^-s``.
    """
    s = Fraction(s)
    if s <= 0:
        raise ValueError("s must be positive")
    with _precision(prec):
        x = iv.mpf(4) ** (-(iv.mpf(s.numerator) / s.denominator))
        total, xq = iv.mpf(0), x
        for q in range(2, q_max + 1):
            xq = xq * x
            total += totient(q) * xq
        Q = q_max
        tail = xq * x * ((Q + 1) - Q * x) / (1 - x) ** 2
        lo, _ = _exact(total)
        _, hi = _exact(total + tail)
    return lo, hi


def attractor_dimension(tolerance: float | Fraction = Fraction(1, 10**6), q_max: int = 256,
                        prec: int = 128) -> DimensionSolution:
    """Bisection for the root of ``sum_{q>=2} phi(q) 4^(-q s) = 1``.

    Each step certifies the sign of ``sum - 1`` at the midpoint (the sum is
    strictly decreasing in ``s``); if the bounds straddle 1 the truncation
    is doubled.
    """
    tolerance = Fraction(tolerance)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    lo, hi = Fraction(1, 4), Fraction(1)
    residual = Fraction(0)
    for end, want in ((lo, 1), (hi, -1)):
        f_lo, f_hi = dimension_sum(end, q_max, prec)
        if not (f_lo > 1 if want > 0 else f_hi < 1):
            raise ArithmeticError(f"initial bracket is not certified at s = {end}")
    while hi - lo > tolerance:
        mid = (lo + hi) / 2
        while True:
            f_lo, f_hi = dimension_sum(mid, q_max, prec)
            if f_lo > 1 or f_hi < 1:
                break
            if q_max > 1 << 14:
                raise ArithmeticError("could not separate the sum from 1")
            q_max *= 2
            prec += 64
        residual = max(residual, f_hi - f_lo)
        if f_lo > 1:
            lo = mid
        else:
            hi = mid
    return DimensionSolution(lo, hi, residual, q_max)


def measure_identity_check(q_max: int) -> tuple[Fraction, Fraction]:
    """Partial sum of ``phi(q) / (2^q - 1)`` for ``2 <= q <= q_max`` and a bound on the rest.

    The full series sums to 1.  ``phi(q) / (2^q - 1) <= 2q / 2^q`` gives a
    tail of at most ``2 (q_max + 2) / 2^q_max``.
    """
    if q_max < 2:
        raise ValueError("q_max must be >= 2")
    partial = sum(Fraction(totient(q), 2**q - 1) for q in range(2, q_max + 1))
    return partial, Fraction(2 * (q_max + 2), 2**q_max)


def image_complexity(r: Fraction, k: int) -> int:
    """Number of distinct length-``kq`` prefixes of ``F_r`` images (``2^k``, since ``F_r`` is injective on blocks)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return len({substitute(r, "".join(w)) for w in product("01", repeat=k)})
