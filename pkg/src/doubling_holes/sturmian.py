"""Balanced words, standard words and the substitutions rho_r.

A rotation number is a :class:`~fractions.Fraction` strictly between 0 and 1.
A vector of rotation numbers ``(r_1, ..., r_n)`` is a plain tuple; the
composition ``rho_{r_1} ... rho_{r_n}`` applied to ``0`` and ``1`` gives the
renormalisation words ``s_n`` and ``t_n`` (:func:`compose_st`).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

from .words import complement

__all__ = [
    "rotation",
    "parse_rotation",
    "parse_rvector",
    "rotations",
    "continued_fraction",
    "standard_word",
    "characteristic_word",
    "omega_pair",
    "substitute",
    "substitute_many",
    "compose_st",
    "q_products",
    "is_balanced",
    "is_cyclically_balanced",
    "cyclic_class",
    "limit_word",
]


def rotation(p: int, q: int | None = None) -> Fraction:
    """Validated rotation number ``p/q`` in ``(0, 1)``."""
    r = Fraction(p) if q is None else Fraction(p, q)
    if not 0 < r < 1:
        raise ValueError(f"rotation number {r} is not in (0, 1)")
    return r


def parse_rotation(text: str) -> Fraction:
    return rotation(Fraction(text.strip()))


def parse_rvector(text: str) -> tuple[Fraction, ...]:
    """Parse ``"1/2,1/3,2/5"``."""
    return tuple(parse_rotation(part) for part in text.split(",") if part.strip())


def rotations(q_max: int, q_min: int = 2) -> list[Fraction]:
    """All rotation numbers with denominator in ``[q_min, q_max]``, sorted by (q, p)."""
    out = []
    for q in range(max(q_min, 2), q_max + 1):
        out.extend(Fraction(p, q) for p in range(1, q) if Fraction(p, q).denominator == q)
    return out


def continued_fraction(r: Fraction) -> list[int]:
    """Partial quotients ``[a_1, ..., a_n]`` of ``r = [0; a_1, ..., a_n]``, last one >= 2."""
    r = rotation(r)
    out = []
    num, den = r.numerator, r.denominator
    while num:
        a, rem = divmod(den, num)
        out.append(a)
        den, num = num, rem
    return out


def _standard_words(quotients: Iterable[int]) -> Iterator[str]:
    # quotients are a_1, a_2, ... of a number in (0, 1/2]: d_1 = a_1 - 1
    prev, cur = "1", "0"
    for k, a in enumerate(quotients):
        d = a - 1 if k == 0 else a
        if d < 1:
            raise ValueError("first partial quotient must be >= 2 for the standard-word recursion")
        prev, cur = cur, cur * d + prev
        yield cur


def standard_word(r: Fraction) -> str:
    """The standard word of ``r <= 1/2``: length ``q`` with ``p`` ones."""
    r = rotation(r)
    if r > Fraction(1, 2):
        raise ValueError("standard_word needs r <= 1/2; use the complement rule above 1/2")
    *_, last = _standard_words(continued_fraction(r))
    return last


def characteristic_word(quotients: Iterable[int], min_len: int) -> str:
    """Prefix (length >= ``min_len``) of the characteristic word of ``[0; a_1, a_2, ...]``.

    ``quotients`` must be long enough (an irrational number has an endless
    supply).  For ``a_1 = 1`` (number above 1/2) the word is the complement
    of the characteristic word of ``1 - gamma = [0; a_2 + 1, a_3, ...]``.
    """
    it = iter(quotients)
    a1 = next(it)
    if a1 == 1:
        a2 = next(it)
        return complement(characteristic_word(_chain([a2 + 1], it), min_len))
    word = ""
    for word in _standard_words(_chain([a1], it)):
        if len(word) >= min_len:
            return word
    raise ValueError(f"continued fraction exhausted before reaching length {min_len}")


def _chain(head, tail):
    yield from head
    yield from tail


@lru_cache(maxsize=None)
def omega_pair(r: Fraction) -> tuple[str, str]:
    """``(omega_r^-, omega_r^+)``: the extreme cyclically balanced words of slope ``r``.

    ``omega^-`` is the largest rotation beginning with 0, ``omega^+`` the
    smallest beginning with 1.
    """
    r = rotation(r)
    if r > Fraction(1, 2):
        lo, hi = omega_pair(1 - r)
        return complement(hi), complement(lo)
    w = standard_word(r)
    return "01" + w[:-2], "10" + w[:-2]


def substitute(r: Fraction, w: str) -> str:
    """``rho_r(w)``: 0 -> omega_r^-, 1 -> omega_r^+."""
    lo, hi = omega_pair(r)
    return "".join(hi if c == "1" else lo for c in w)


def substitute_many(v: Sequence[Fraction], w: str) -> str:
    """``rho_{r_1} ... rho_{r_n}(w)`` (innermost substitution applied first)."""
    for r in reversed(v):
        w = substitute(r, w)
    return w


def compose_st(v: Sequence[Fraction]) -> tuple[str, str]:
    """``(s_n, t_n) = (rho_{r_1}...rho_{r_n}(0), rho_{r_1}...rho_{r_n}(1))``."""
    return _compose(tuple(v))


@lru_cache(maxsize=4096)
def _compose(v: tuple[Fraction, ...]) -> tuple[str, str]:
    if not v:
        return "0", "1"
    s, t = _compose(v[:-1])
    lo, hi = omega_pair(v[-1])
    sub = {"0": s, "1": t}
    return "".join(sub[c] for c in lo), "".join(sub[c] for c in hi)


def q_products(v: Sequence[Fraction]) -> list[int]:
    """``[Q_1, ..., Q_n]`` with ``Q_k = q_1 ... q_k``."""
    return list(accumulate((r.denominator for r in v), lambda x, y: x * y))


def is_balanced(w: str) -> bool:
    """Any two factors of equal length differ by at most one in their number of 1s."""
    n = len(w)
    ones = [0, *accumulate(int(c) for c in w)]
    for k in range(1, n):
        counts = [ones[i + k] - ones[i] for i in range(n - k + 1)]
        if max(counts) - min(counts) > 1:
            return False
    return True


def is_cyclically_balanced(w: str) -> bool:
    return is_balanced(w + w)


def cyclic_class(r: Fraction) -> tuple[list[str], int]:
    """Sorted rotations ``w_0 < ... < w_{q-1}`` of omega_r^- and the offset ``p'``.

    ``p'`` satisfies ``sigma(w_j^inf) = w_{j+p' mod q}^inf`` for every ``j``;
    it is found by checking the relation directly.
    """
    w, _ = omega_pair(r)
    q = len(w)
    words = sorted({w[i:] + w[:i] for i in range(q)})
    index = {u: j for j, u in enumerate(words)}
    for offset in range(q):
        if all(index[u[1:] + u[0]] == (j + offset) % q for j, u in enumerate(words)):
            return words, offset
    raise AssertionError(f"no shift offset for {r}")  # pragma: no cover


def limit_word(v: Iterable[Fraction], min_len: int, side: int = 0) -> str:
    """A prefix of length >= ``min_len`` of the limit word ``s(v)`` (side 0) or ``t(v)`` (side 1).

    ``v`` may be infinite (e.g. ``itertools.repeat(Fraction(1, 2))``); it is
    consumed only until ``Q_n >= min_len``.  This works because ``s_{n+1}``
    begins with ``s_n`` and ``t_{n+1}`` with ``t_n``.
    """
    if min_len < 1:
        raise ValueError("min_len must be >= 1")
    prefix: list[Fraction] = []
    for r in v:
        prefix.append(r)
        s, t = compose_st(prefix)
        if len(s) >= min_len:
            return t if side else s
    raise ValueError(f"rotation vector exhausted before reaching length {min_len}")

