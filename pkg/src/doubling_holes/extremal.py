"""Extremal (kneading-admissible) pairs of words and the lemmas built on them.

A pair ``(s, t)`` with ``s`` starting in 0 and ``t`` in 1 is extremal when no
proper shift of ``s^inf`` or ``t^inf`` falls strictly between them (the
Lorenz-map kneading condition).  The checks here are exact: every infinite
word involved is eventually periodic.
"""
from __future__ import annotations

from itertools import product

from .words import PeriodicPoint, inf, lex_cmp, periodic, shift

__all__ = [
    "NotExtremalError",
    "is_extremal",
    "substitute_pair",
    "substitution_closure_check",
    "shift_avoidance",
    "reflection_check",
    "entropy_witness",
]


class NotExtremalError(ValueError):
    """A lemma that assumes an extremal pair was handed something else."""


def _check_pair(s: str, t: str) -> None:
    if not s or not t or s[0] != "0" or t[0] != "1":
        raise ValueError(f"need s starting with 0 and t with 1, got ({s!r}, {t!r})")


def is_extremal(s: str, t: str) -> bool:
    _check_pair(s, t)
    lo, hi = inf(s), inf(t)
    for k in range(1, len(s)):
        x = shift(lo, k)
        if lex_cmp(lo, x) <= 0 and lex_cmp(x, hi) < 0:
            return False
    for k in range(1, len(t)):
        y = shift(hi, k)
        if lex_cmp(lo, y) < 0 and lex_cmp(y, hi) <= 0:
            return False
    return True


def _require_extremal(s: str, t: str) -> None:
    if not is_extremal(s, t):
        raise NotExtremalError(f"({s}, {t}) is not extremal")


def substitute_pair(outer: tuple[str, str], inner: tuple[str, str]) -> tuple[str, str]:
    """``(S(s, t), T(s, t))``: replace 0 by ``s`` and 1 by ``t`` in the outer pair."""
    s, t = inner
    sub = {"0": s, "1": t}
    S, T = outer
    return "".join(sub[c] for c in S), "".join(sub[c] for c in T)


def substitution_closure_check(outer: tuple[str, str], inner: tuple[str, str]) -> bool:
    """Is the substituted pair extremal?  Both inputs must be extremal."""
    _require_extremal(*outer)
    _require_extremal(*inner)
    return is_extremal(*substitute_pair(outer, inner))


def _outside(lo: PeriodicPoint, hi: PeriodicPoint, left: PeriodicPoint, right: PeriodicPoint) -> bool:
    # the lexicographic interval [lo, hi] misses the open interval (left, right)
    return lex_cmp(hi, left) <= 0 or lex_cmp(lo, right) >= 0


def shift_avoidance(s: str, t: str) -> bool:
    """``sigma^k I_L`` and ``sigma^k I_R`` miss ``(s^inf, t^inf)`` for ``0 < k < |s|``, ``|t|``.

    ``I_L = [s^inf, s t^inf]`` and ``I_R = [t s^inf, t^inf]``.  Every word in
    ``I_L`` starts with ``s``, so ``sigma^k`` is monotone on it and maps it onto
    the interval spanned by the shifted endpoints.
    """
    _require_extremal(s, t)
    left, right = inf(s), inf(t)
    for k in range(1, len(s)):
        if not _outside(shift(left, k), shift(periodic(s, t), k), left, right):
            return False
    for k in range(1, len(t)):
        if not _outside(shift(periodic(t, s), k), shift(right, k), left, right):
            return False
    return True


def reflection_check(s: str, t: str) -> bool:
    """Reflection property of extremal pairs.

    If ``sigma^j s^inf < s^inf`` and ``s_{j+1}...s_N = s_1...s_{N-j}`` then
    ``s_{N-j+1} = 1``; symmetrically, if ``sigma^j t^inf > t^inf`` and the
    same overlap holds for ``t`` then ``t_{N-j+1} = 0``.
    """
    _require_extremal(s, t)
    for w, sign, want in ((s, -1, "1"), (t, 1, "0")):
        n = len(w)
        base = inf(w)
        for j in range(1, n):
            if lex_cmp(shift(base, j), base) == sign and w[j:] == w[: n - j] and w[n - j] != want:
                return False
    return True


def _w_words(s: str, ell: int, n: int, length: int):
    """All truncations to ``length`` of ``s^{n_1} s[:ell] s^{n_2} s[:ell] ...`` with ``n_i in {n, n+1}``."""
    blocks = {m: s * m + s[:ell] for m in (n, n + 1)}
    min_block = len(blocks[n])
    count = -(-length // min_block) if length else 0
    seen = set()
    for choice in product((n, n + 1), repeat=count):
        word = "".join(blocks[m] for m in choice)[:length]
        if word not in seen:
            seen.add(word)
            yield word


def _violates(word: str, left: PeriodicPoint, right: PeriodicPoint) -> bool:
    """Some suffix of ``word`` is provably strictly inside ``(left, right)``."""
    size = len(word)
    lp, rp = left.prefix(size), right.prefix(size)
    for j in range(size):
        tail = word[j:]
        m = len(tail)
        if lp[:m] < tail < rp[:m]:
            return True
    return False


def entropy_witness(s: str, t: str, ell: int, u: PeriodicPoint, check_len: int | None = None,
                    max_extra: int = 32) -> int:
    """Smallest ``n`` for which ``W_n`` avoids ``(s^inf, u)`` up to ``check_len`` symbols.

    ``t`` must be ``s`` rotated left by ``ell`` and ``u`` must lie in
    ``(s t^inf, t s^inf)``.  The search starts at the least ``n`` with
    ``u`` departing from ``t s^inf`` within ``|t| + n|s|`` symbols, then
    increases ``n`` until the bounded check passes (larger ``n`` only
    thins out ``W_n``).  A failure after ``max_extra`` increments raises
    ``AssertionError``.
    """
    _check_pair(s, t)
    if s[ell:] + s[:ell] != t:
        raise ValueError(f"{t} is not {s} rotated by {ell}")
    lo, hi = periodic(s, t), periodic(t, s)
    if not (lex_cmp(lo, u) < 0 and lex_cmp(u, hi) < 0):
        raise ValueError(f"{u} is not inside (s t^inf, t s^inf)")
    n = 0
    while u.prefix(len(t) + n * len(s)) == hi.prefix(len(t) + n * len(s)):
        n += 1
    n = max(n, 1)
    left = inf(s)
    for cand in range(n, n + max_extra + 1):
        horizon = 10 * len(s) * (cand + 1) if check_len is None else check_len
        if not any(_violates(w, left, u) for w in _w_words(s, ell, cand, horizon)):
            return cand
    raise AssertionError(f"no n <= {n + max_extra} keeps W_n out of (s^inf, {u})")


def rotation_offset(s: str, t: str) -> int | None:
    """The ``ell`` with ``s[ell:] + s[:ell] == t``, if any."""
    for ell in range(1, len(s)):
        if s[ell:] + s[:ell] == t:
            return ell
    return None

