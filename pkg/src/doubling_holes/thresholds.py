"""Critical values of the hole's right end as a function of its left end ``a``.

``phi(a)``: largest ``b`` for which something other than 0 and 1 survives.
``chi(a)``: largest ``b`` for which the survivor set is uncountable.
``psi(a)``: largest ``b`` for which infinitely many survivors stay in ``[2b-1, 2a]``.

All three are computed from the renormalisation tower; values are given as
words where possible and always as a rational bracket.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import repeat

from .renorm import (
    Bridge,
    BridgePoint,
    LimitPoint,
    Plateau,
    Unresolved,
    _stern_brocot,
    locate,
    locate_level,
    word_bracket,
)
from .sturmian import compose_st, limit_word, omega_pair, q_products
from .words import PeriodicPoint, finite_value, format_point, inf, periodic, word_value

__all__ = [
    "ThresholdValue",
    "CriticalHoleAnswer",
    "phi",
    "chi",
    "psi",
    "foch_classify",
    "soch_classify",
    "thue_morse_constant",
    "min_soch_length",
    "bound_audit",
]

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)
DEFAULT_PRECISION = Fraction(1, 2**64)


@dataclass(frozen=True)
class ThresholdValue:
    """A threshold value: exact (``lo == hi``, with a word) or a bracket ``[lo, hi]``.

    ``kind`` is ``"exact"``, ``"approximated"`` (a known infinite word cut
    to the requested precision) or ``"unresolved"`` (search bounds ran out;
    the bracket comes from the general inequalities).
    """

    kind: str
    lo: Fraction
    hi: Fraction
    word: PeriodicPoint | None = None
    basis: str = ""

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    @property
    def resolved(self) -> bool:
        return self.kind != "unresolved"

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError(f"{self.kind} threshold has no exact value")
        return self.lo

    def __str__(self) -> str:
        if self.is_exact:
            return f"{format_point(self.word)} = {self.lo}"
        return f"[{float(self.lo):.12f}, {float(self.hi):.12f}] ({self.kind})"


def _exact(word: PeriodicPoint, basis: str) -> ThresholdValue:
    x = word_value(word)
    return ThresholdValue("exact", x, x, word, basis)


def _approx(prefix: str, basis: str) -> ThresholdValue:
    lo, hi = word_bracket(prefix)
    return ThresholdValue("approximated", lo, hi, None, basis)


def _unresolved(lo: Fraction, hi: Fraction, basis: str) -> ThresholdValue:
    return ThresholdValue("unresolved", lo, hi, None, basis)


def _bits(precision: Fraction) -> int:
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    return max(1, (precision.denominator // precision.numerator).bit_length())


def _check_domain(a) -> None:
    if isinstance(a, (BridgePoint, LimitPoint)):
        return
    if not QUARTER < Fraction(a) < HALF:
        raise ValueError(f"a = {a} is outside (1/4, 1/2)")


def thue_morse_constant(bits: int = 64) -> tuple[Fraction, Fraction]:
    """Bracket of width ``2^-bits`` around the value of the Thue-Morse word ``0110 1001 ...``."""
    return word_bracket(limit_word(repeat(HALF), bits))


def min_soch_length(bits: int = 64) -> tuple[Fraction, Fraction]:
    """Bracket of ``(1/4) prod_{j>=1} (1 - 2^(-2^j))``.

    Partial products decrease; the remaining factors take off at most
    ``2 * 2^(-2^(J+1))`` in relative terms.
    """
    J = 1
    while 2 ** (J + 1) < bits + 2:
        J += 1
    p = QUARTER
    for j in range(1, J + 1):
        p *= 1 - Fraction(1, 2 ** (2**j))
    return p * (1 - Fraction(2, 2 ** (2 ** (J + 1)))), p


def _global_chi_bracket(a: Fraction) -> tuple[Fraction, Fraction]:
    return a + min_soch_length()[0], a + QUARTER


def phi(a, q_max: int = 64, precision: Fraction = DEFAULT_PRECISION) -> ThresholdValue:
    """``phi(a) = (omega_r^+)^inf`` on ``delta(r)``; ``a + 1/4`` on the level-one bridge set."""
    _check_domain(a)
    if isinstance(a, BridgePoint) and a.level == 1:
        return _approx(a.chi_word(_bits(precision)), "bridge set S: phi = chi = a + 1/4")
    if isinstance(a, (BridgePoint, LimitPoint)):
        r = a.prefix[0] if isinstance(a, BridgePoint) else a.vector(1)[0]
    else:
        a = Fraction(a)
        r = locate_level(a, q_max)
        if r is None:
            return _unresolved(a + QUARTER, a + Fraction(1, 3), f"no delta(r) with q <= {q_max}")
    _, t = omega_pair(r)
    return _exact(inf(t), f"a in delta({r}): phi = (omega^+)^inf")


def chi(a, precision: Fraction = DEFAULT_PRECISION, q_max: int = 64, n_max: int = 16) -> ThresholdValue:
    """The boundary of positive dimension over ``a``.

    * plateau ``[s^inf, s t s^inf]`` of ``v``: ``t s^inf``;
    * bridge set below ``v``: ``a + (1 - 2^-Q)(t - s)`` (``a + 1/4`` at level one);
    * limit point ``s(v)``: ``t(v)``.
    """
    _check_domain(a)
    bits = _bits(precision)
    if isinstance(a, BridgePoint):
        basis = "bridge set S: chi = a + 1/4" if a.level == 1 else \
            f"bridge set S_{a.level}: chi = a + (1 - 2^-Q)(t - s)"
        return _approx(a.chi_word(bits), basis)
    if isinstance(a, LimitPoint):
        if a.side:
            raise ValueError("t(v) is not in (1/4, 1/2)")
        return _approx(limit_word(a.vector(), bits, side=1), "limit point s(v): chi = t(v)")
    a = Fraction(a)
    addr = locate(a, q_max=q_max, n_max=n_max)
    if isinstance(addr, Plateau):
        s, t = compose_st(addr.vector)
        return _exact(periodic(t, s), f"plateau of {_fmt(addr.vector)}: chi = t s^inf")
    if isinstance(addr, Bridge):
        s, t = compose_st(addr.prefix)
        word = periodic(t + s, t)
        Q = q_products(addr.prefix)[-1]
        assert word_value(word) == a + (1 - Fraction(1, 2**Q)) * (finite_value(t) - finite_value(s))
        return _exact(word, f"end of tilde_delta{_fmt(addr.prefix)}: chi = a + (1 - 2^-Q)(t - s)")
    lo, hi = _global_chi_bracket(a)
    if addr.prefix:
        s, t = compose_st(addr.prefix)
        lo = max(lo, word_value(periodic(t, s)))
        hi = min(hi, word_value(periodic(t + s, t)))
    return _unresolved(lo, hi, addr.reason)


def psi(a, q_max: int = 64, precision: Fraction = DEFAULT_PRECISION) -> ThresholdValue:
    """Threshold for infinitely many survivors in the attractor ``[2b-1, 2a]``.

    Settled on level one (plateau: ``t s^inf``) or level two
    (``a`` in ``delta(r_1, r_2)``: ``t_2^inf``).  The level-two bridge sets
    are left as brackets.
    """
    _check_domain(a)
    if isinstance(a, BridgePoint) and a.level == 1:
        return _approx(a.chi_word(_bits(precision)), "bridge set S: psi = a + 1/4")
    if isinstance(a, BridgePoint) and a.level == 2:
        lo, hi = a.bracket(_bits(precision))
        return _unresolved(lo + Fraction(3, 16), hi + QUARTER, "level-two bridge set")
    if isinstance(a, (BridgePoint, LimitPoint)):
        v = a.prefix[:2] if isinstance(a, BridgePoint) else a.vector(2)
        return _exact(inf(compose_st(v)[1]), f"a in delta{_fmt(v)}: psi = t_2^inf")
    a = Fraction(a)
    r1 = locate_level(a, q_max)
    if r1 is None:
        return _unresolved(a + Fraction(3, 16), a + QUARTER, f"no delta(r) with q <= {q_max}")
    s, t = omega_pair(r1)
    if a <= word_value(periodic(s + t, s)):
        return _exact(periodic(t, s), f"plateau of ({r1}): psi = chi = t s^inf")
    r2 = None if a == word_value(periodic(s, t)) else _stern_brocot((r1,), a, q_max)
    if r2 is None:
        lo = max(a + Fraction(3, 16), chi(a, q_max=q_max).lo)
        hi = min(a + QUARTER, word_value(inf(t)))
        return _unresolved(lo, hi, f"level-two gap below ({r1})")
    v = (r1, r2)
    return _exact(inf(compose_st(v)[1]), f"a in delta{_fmt(v)}: psi = t_2^inf")


@dataclass(frozen=True)
class CriticalHoleAnswer:
    """The right ends ``b`` making ``(a, b)`` a critical hole of the given order.

    ``kind`` is ``"point"`` (``lo == hi``), ``"interval"`` (every ``b`` in
    ``[lo, hi]``), ``"approximated"`` (a single irrational ``b`` inside the
    bracket) or ``"unresolved"``.
    """

    order: int
    kind: str
    lo: Fraction
    hi: Fraction
    basis: str = ""
    words: tuple[PeriodicPoint, ...] = field(default=())


def _answer(order: int, th: ThresholdValue) -> CriticalHoleAnswer:
    kind = {"exact": "point"}.get(th.kind, th.kind)
    words = (th.word,) if th.word else ()
    return CriticalHoleAnswer(order, kind, th.lo, th.hi, th.basis, words)


def _interval(order: int, lo: PeriodicPoint, hi: PeriodicPoint, basis: str) -> CriticalHoleAnswer:
    return CriticalHoleAnswer(order, "interval", word_value(lo), word_value(hi), basis, (lo, hi))


def _small_a(order: int, a) -> CriticalHoleAnswer | None:
    if isinstance(a, (BridgePoint, LimitPoint)):
        return None
    a = Fraction(a)
    if not 0 < a < HALF:
        raise ValueError(f"a = {a} is outside (0, 1/2)")
    if a <= QUARTER:
        return CriticalHoleAnswer(order, "point", HALF, HALF, "a <= 1/4: b = 1/2", (periodic("1", "0"),))
    return None


def foch_classify(a, q_max: int = 64) -> CriticalHoleAnswer:
    """First-order critical holes ``(a, b)``."""
    small = _small_a(1, a)
    if small:
        return small
    if not isinstance(a, (BridgePoint, LimitPoint)):
        r = locate_level(Fraction(a), q_max)
        if r is not None:
            s, t = omega_pair(r)
            if Fraction(a) == word_value(inf(s)):
                return _interval(1, periodic(t, s), inf(t), f"a = s^inf for r = {r}: b in [t s^inf, t^inf]")
    return _answer(1, phi(a, q_max=q_max))


def soch_classify(a, q_max: int = 64, n_max: int = 16) -> CriticalHoleAnswer:
    """Second-order critical holes ``(a, b)``.

    The right ends are ``chi(a)`` except at ``a = s_n t_n^inf``, where ``chi``
    jumps and every ``b`` in ``[t_n s_n t_n^inf, t_n^inf]`` qualifies (the
    mirror image of the plateau ``[s_n^inf, s_n t_n s_n^inf]``).
    """
    small = _small_a(2, a)
    if small:
        return small
    if not isinstance(a, (BridgePoint, LimitPoint)):
        addr = locate(Fraction(a), q_max=q_max, n_max=n_max)
        if isinstance(addr, Bridge):
            s, t = compose_st(addr.prefix)
            return _interval(2, periodic(t + s, t), inf(t),
                             f"a = s t^inf for {_fmt(addr.prefix)}: b in [t s t^inf, t^inf]")
    return _answer(2, chi(a, q_max=q_max, n_max=n_max))


def bound_audit(samples, q_max: int = 64, n_max: int = 16) -> list[dict]:
    """Check the general inequalities on each sample ``a``.

    ``a + 1/4 <= phi <= a + 1/3``, ``a + (1 - 2a*) <= chi <= a + 1/4`` and
    ``chi <= psi <= phi``.  Returns one row per sample with a list of the
    violated inequalities (empty when all hold) and the unresolved values.
    """
    c_lo, _ = min_soch_length()
    rows = []
    for a in samples:
        a = Fraction(a)
        f, c, p = phi(a, q_max=q_max), chi(a, q_max=q_max, n_max=n_max), psi(a, q_max=q_max)
        bad = []
        if f.resolved:
            if not a + QUARTER <= f.lo:
                bad.append("phi >= a + 1/4")
            if not f.hi <= a + Fraction(1, 3):
                bad.append("phi <= a + 1/3")
        if c.resolved:
            if not a + c_lo <= c.lo:
                bad.append("chi >= a + 1 - 2a*")
            if not c.hi <= a + QUARTER:
                bad.append("chi <= a + 1/4")
        if c.resolved and p.resolved and not c.lo <= p.hi:
            bad.append("chi <= psi")
        if p.resolved and f.resolved and not p.lo <= f.hi:
            bad.append("psi <= phi")
        rows.append({
            "a": a,
            "phi": f,
            "chi": c,
            "psi": p,
            "violations": bad,
            "unresolved": [n for n, th in (("phi", f), ("chi", c), ("psi", p)) if not th.resolved],
        })
    return rows


def _fmt(v) -> str:
    return "(" + ", ".join(str(r) for r in v) + ")"
