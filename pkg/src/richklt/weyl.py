"""Weyl group elements as canonical reduced words, Bruhat order and covers.

An element is stored as the lexicographically least reduced word of 1-based
simple reflection indices.  Normal forms are computed from the action on
``rho`` (all ones in fundamental-weight coordinates), which is faithful
because ``rho`` is regular dominant in every symmetrizable type.

Reflection data of a cover ``lower < upper`` can be read on either side:

* ``side="left"``: ``upper = s_beta * lower``;
* ``side="right"``: ``upper = lower * s_beta``.

The right-hand reading is the one that governs vanishing orders of extremal
sections (see ``richardson.boundary``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterator, Sequence

from . import cartan
from .cartan import GCM
from .errors import IndexOutOfRange, MixedRootData, NotACover, NotComparable

__all__ = [
    "WeylElement", "CoverDatum", "canonicalize", "identity", "parse_word",
    "multiply", "inverse", "bruhat_leq", "covers_in_interval",
    "cocovers_in_interval", "cover_reflection", "maximal_chains",
    "all_elements", "reflection_element", "rho_minus_w_rho",
]


@dataclass(frozen=True)
class WeylElement:
    gcm: GCM
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return " ".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"WeylElement({str(self)!r})"

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return multiply(self, other)

    def __le__(self, other: "WeylElement") -> bool:
        return bruhat_leq(self, other)

    def sort_key(self):
        return (self.length, self.word)


@dataclass(frozen=True)
class CoverDatum:
    lower: WeylElement
    upper: WeylElement
    root: tuple[int, ...]
    coroot: tuple[int, ...]
    rho_pairing: int
    side: str = "left"


def parse_word(text) -> tuple[int, ...]:
    """``"1 2 1"`` -> (1, 2, 1); the empty string is the identity."""
    if isinstance(text, str):
        try:
            return tuple(int(tok) for tok in text.replace(",", " ").split())
        except ValueError:
            raise IndexOutOfRange(f"bad word {text!r}") from None
    return tuple(int(x) for x in text)


def _check_word(g: GCM, word) -> tuple[int, ...]:
    word = parse_word(word)
    for i in word:
        if not 1 <= i <= g.rank:
            raise IndexOutOfRange(f"index {i} outside 1..{g.rank}")
    return word


@lru_cache(maxsize=None)
def _act_rho(g: GCM, word: tuple[int, ...]) -> tuple[int, ...]:
    """``w(rho)`` in fundamental-weight coordinates."""
    lam = cartan.rho(g)
    for i in reversed(word):
        lam = cartan.reflect_weight(g, i - 1, lam)
    return lam


@lru_cache(maxsize=None)
def _canonical_word(g: GCM, word: tuple[int, ...]) -> tuple[int, ...]:
    # w has left descent i iff <w rho, alpha_i^vee> < 0; peel the smallest one
    lam = _act_rho(g, word)
    out = []
    while True:
        neg = [i for i, c in enumerate(lam) if c < 0]
        if not neg:
            break
        i = neg[0]
        out.append(i + 1)
        lam = cartan.reflect_weight(g, i, lam)
    return tuple(out)


def canonicalize(g: GCM, word) -> WeylElement:
    """Lex-least reduced word of the element represented by ``word``.

    >>> from richklt.cartan import builtin_gcm
    >>> str(canonicalize(builtin_gcm("A2"), "1 2 1 2"))
    '2 1'
    """
    return WeylElement(g, _canonical_word(g, _check_word(g, word)))


def identity(g: GCM) -> WeylElement:
    return WeylElement(g, ())


def _same(a: WeylElement, b: WeylElement) -> None:
    if a.gcm != b.gcm:
        raise MixedRootData("elements belong to different root data")


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    _same(a, b)
    return WeylElement(a.gcm, _canonical_word(a.gcm, a.word + b.word))


def inverse(a: WeylElement) -> WeylElement:
    return WeylElement(a.gcm, _canonical_word(a.gcm, a.word[::-1]))


def _has_left_descent(a: WeylElement, i: int) -> bool:
    return _act_rho(a.gcm, a.word)[i - 1] < 0


def _left_mul(i: int, a: WeylElement) -> WeylElement:
    return WeylElement(a.gcm, _canonical_word(a.gcm, (i,) + a.word))


@lru_cache(maxsize=None)
def _leq(v: WeylElement, w: WeylElement) -> bool:
    if v.length > w.length:
        return False
    if v.length == w.length:
        return v == w
    if v.length == 0:
        return True
    s = w.word[0]
    sw = _left_mul(s, w)
    # lifting property
    if _has_left_descent(v, s):
        return _leq(_left_mul(s, v), sw)
    return _leq(v, sw)


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    _same(v, w)
    return _leq(v, w)


def rho_minus_w_rho(g: GCM, word: Sequence[int]) -> tuple[int, ...]:
    """``rho - w(rho)`` in the simple-root basis, exactly.

    Writing a weight as ``rho - gamma``, ``s_i`` sends ``gamma`` to
    ``gamma + (1 - <gamma, alpha_i^vee>) alpha_i``; no inverse of the Cartan
    matrix is needed, so this works for singular (affine) matrices too.
    """
    n = g.rank
    gamma = [0] * n
    for i in reversed(tuple(word)):
        k = i - 1
        c = sum(gamma[j] * g.entries[k][j] for j in range(n))
        gamma[k] += 1 - c
    return tuple(gamma)


def reflection_element(g: GCM, root: Sequence[int]) -> WeylElement:
    """``s_beta`` for a positive real root ``beta``."""
    rec = cartan.root_lookup(g, root)
    if rec is None:
        raise NotACover(f"{tuple(root)} is not a positive real root")
    _, u, i = rec
    word = tuple(j + 1 for j in u) + (i + 1,) + tuple(j + 1 for j in reversed(u))
    return WeylElement(g, _canonical_word(g, word))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def _cover_reflection(lower: WeylElement, upper: WeylElement, side: str) -> CoverDatum:
    g = lower.gcm
    if upper.length != lower.length + 1:
        raise NotACover(f"length gap {upper.length - lower.length} between {lower} and {upper}")
    t = multiply(upper, inverse(lower)) if side == "left" else multiply(inverse(lower), upper)
    gamma = rho_minus_w_rho(g, t.word)
    if any(x < 0 for x in gamma) or not any(gamma):
        raise NotACover(f"{lower} -> {upper}: not related by a positive reflection")
    # rho - t rho = <rho, beta^vee> beta; test every divisor of the content
    for d in _divisors(gcd(*gamma)):
        cand = tuple(x // d for x in gamma)
        rec = cartan.root_lookup(g, cand)
        if rec is None:
            continue
        coroot = rec[0]
        if reflection_element(g, cand) == t and cartan.height(coroot) == d:
            return CoverDatum(lower, upper, cand, coroot, d, side)
    raise NotACover(f"{lower} -> {upper}: {t} is not a reflection")


def cover_reflection(lower: WeylElement, upper: WeylElement, side: str = "left") -> CoverDatum:
    _same(lower, upper)
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return _cover_reflection(lower, upper, side)


def _fmt(u: WeylElement) -> str:
    return str(u) or "e"


def _require_leq(v: WeylElement, w: WeylElement) -> None:
    _same(v, w)
    if not _leq(v, w):
        raise NotComparable(f"{_fmt(v)} is not below {_fmt(w)} in Bruhat order")


@lru_cache(maxsize=None)
def _subword_elements(w: WeylElement, length: int) -> tuple[WeylElement, ...]:
    """Distinct elements of the given length below ``w``."""
    seen = set()
    for pos in combinations(range(w.length), length):
        word = _canonical_word(w.gcm, tuple(w.word[p] for p in pos))
        if len(word) == length:
            seen.add(word)
    return tuple(WeylElement(w.gcm, x) for x in sorted(seen))


def covers_in_interval(v: WeylElement, w: WeylElement, side: str = "left") -> list[CoverDatum]:
    """All ``v'`` with ``v < v' <= w`` and ``l(v') = l(v) + 1``."""
    _require_leq(v, w)
    if v.length >= w.length:
        return []
    ups = [u for u in _subword_elements(w, v.length + 1) if _leq(v, u)]
    return [cover_reflection(v, u, side) for u in ups]


def cocovers_in_interval(v: WeylElement, w: WeylElement, side: str = "left") -> list[CoverDatum]:
    """All ``w'`` with ``v <= w' < w`` and ``l(w') = l(w) - 1``."""
    _require_leq(v, w)
    if v.length >= w.length:
        return []
    downs = [u for u in _subword_elements(w, w.length - 1) if _leq(v, u)]
    return [cover_reflection(u, w, side) for u in downs]


def maximal_chains(v: WeylElement, w: WeylElement, side: str = "left") -> Iterator[list[CoverDatum]]:
    """Depth-first stream of saturated chains from ``v`` up to ``w``."""
    _require_leq(v, w)

    def walk(u, prefix):
        if u == w:
            yield list(prefix)
            return
        for c in covers_in_interval(u, w, side):
            prefix.append(c)
            yield from walk(c.upper, prefix)
            prefix.pop()

    return walk(v, [])


def all_elements(g: GCM, max_length: int | None = None) -> list[WeylElement]:
    """Breadth-first enumeration, sorted by (length, word).

    Terminates on its own only for finite Weyl groups; pass ``max_length``
    otherwise.
    """
    level = {()}
    out = [()]
    k = 0
    while level and (max_length is None or k < max_length):
        nxt = set()
        for word in level:
            for i in range(1, g.rank + 1):
                new = _canonical_word(g, (i,) + word)
                if len(new) == k + 1:
                    nxt.add(new)
        out.extend(sorted(nxt))
        level = nxt
        k += 1
    return [WeylElement(g, x) for x in out]
