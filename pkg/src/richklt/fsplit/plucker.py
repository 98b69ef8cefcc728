"""Plücker coordinates of SL_n/B and Richardson ideals in them (n <= 4)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm

from .. import weyl
from ..cartan import type_a
from ..errors import NotComparable, UnsupportedRank
from .groebner import GroebnerBasis, groebner
from .ideals import eliminate, intersect_all
from .poly import Poly, PolyRing

__all__ = [
    "PluckerModel", "flag_plucker_model", "richardson_ideal", "RichardsonIdeals",
    "permutation", "subset_leq", "var_name", "det",
]


def var_name(S) -> str:
    return "p" + "".join(str(i) for i in sorted(S))


def permutation(word, n: int) -> tuple[int, ...]:
    """One-line notation of ``s_{i1} ... s_{ik}`` acting on 1..n (rightmost first)."""
    perm = list(range(1, n + 1))
    # perm[j-1] = u(j); u = s_{i1} o ... o s_{ik}
    for j in range(n):
        x = j + 1
        for i in reversed(tuple(word)):
            if x == i:
                x = i + 1
            elif x == i + 1:
                x = i
        perm[j] = x
    return tuple(perm)


def subset_leq(S, T) -> bool:
    """Componentwise (Gale) order on equal-size subsets."""
    return all(a <= b for a, b in zip(sorted(S), sorted(T)))


def det(rows):
    """Determinant by cofactor expansion over column subsets (no division)."""
    n = len(rows)
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def minor(r, cols):
        if r == n:
            return 1
        total = 0
        for k, c in enumerate(cols):
            entry = rows[r][c]
            if entry == 0 or (hasattr(entry, "is_zero") and entry.is_zero()):
                continue
            term = entry * minor(r + 1, cols[:k] + cols[k + 1:])
            total = total + term if k % 2 == 0 else total - term
        return total

    return minor(0, tuple(range(n)))


@dataclass(frozen=True)
class PluckerModel:
    n: int
    subsets: tuple[tuple[int, ...], ...]
    ring: PolyRing
    relations: GroebnerBasis
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def names(self) -> tuple[str, ...]:
        return self.ring.names

    def ring_mod(self, p: int) -> PolyRing:
        return self.ring.with_field(p) if p else self.ring

    def relations_mod(self, p: int) -> GroebnerBasis:
        """Relations over F_p (primitive integer lift of the rational basis)."""
        if not p:
            return self.relations
        if p not in self._cache:
            R = self.ring_mod(p)
            gens = []
            for g in self.relations:
                den = lcm(*(c.denominator for c in g.terms.values()))
                ints = {e: int(c * den) for e, c in g.terms.items()}
                cont = gcd(*ints.values())
                gens.append(R.poly({e: v // cont for e, v in ints.items()}))
            self._cache[p] = groebner(gens, R) if gens else GroebnerBasis(R, ())
        return self._cache[p]

    def grading(self) -> list[list[int]]:
        """One weight vector per subset size; relations are homogeneous for each."""
        return [[int(len(S) == k) for S in self.subsets] for k in range(1, self.n)]


@lru_cache(maxsize=None)
def flag_plucker_model(n: int, characteristic: int = 0) -> PluckerModel:
    """Plücker model of the flag variety of SL_n.

    The relations are the kernel of ``p_S -> T_k * det(U[S, 1..k])`` with
    ``U`` generic lower unitriangular and one scaling ``T_k`` per size; the
    image of ``U^- T`` is dense in the cone, so this is the same kernel as
    for a generic matrix.  Computed by elimination over Q.
    """
    if not 2 <= n <= 4:
        raise UnsupportedRank(f"Plücker models are provided for 2 <= n <= 4, not {n}")
    subsets = tuple(S for k in range(1, n) for S in combinations(range(1, n + 1), k))
    ring = PolyRing([var_name(S) for S in subsets], 0)
    params = [f"_u{i}{j}" for i in range(2, n + 1) for j in range(1, i)] + \
             [f"_T{k}" for k in range(1, n)]
    big = ring.with_elim(params)
    U = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                U[i][j] = big.one()
            elif i > j:
                U[i][j] = big.var(f"_u{i + 1}{j + 1}")
            else:
                U[i][j] = big.zero()
    gens = []
    for S in subsets:
        k = len(S)
        m = det([[U[r - 1][c] for c in range(k)] for r in S])
        gens.append(big.var(var_name(S)) - big.var(f"_T{k}") * m)
    G = eliminate(gens, params, ring)
    model = PluckerModel(n, subsets, ring, G)
    if characteristic:
        model.relations_mod(characteristic)
    return model


@dataclass(frozen=True)
class RichardsonIdeals:
    ideal: GroebnerBasis
    boundary: GroebnerBasis
    components: tuple[tuple[str, weyl.WeylElement, GroebnerBasis], ...]


def _vanishing_vars(model: PluckerModel, v: weyl.WeylElement, w: weyl.WeylElement):
    n = model.n
    pv, pw = permutation(v.word, n), permutation(w.word, n)
    out = []
    for S in model.subsets:
        k = len(S)
        lo, hi = pv[:k], pw[:k]
        # p_S survives on X^v_w iff v{1..k} <= S <= w{1..k}
        if not (subset_leq(lo, S) and subset_leq(S, hi)):
            out.append(var_name(S))
    return out


def _ideal(model: PluckerModel, v, w, p: int) -> GroebnerBasis:
    key = ("ideal", v.word, w.word, p)
    if key not in model._cache:
        R = model.ring_mod(p)
        gens = list(model.relations_mod(p)) + [R.var(x) for x in _vanishing_vars(model, v, w)]
        model._cache[key] = groebner(gens, R)
    return model._cache[key]


def richardson_ideal(model: PluckerModel, v: weyl.WeylElement, w: weyl.WeylElement,
                     p: int = 0) -> RichardsonIdeals:
    """Ideal of X^v_w, its boundary ideal and the boundary component ideals.

    The boundary ideal is the intersection of the component ideals (the
    boundary is reduced); for ``v == w`` it is the unit ideal.
    """
    g = type_a(model.n - 1)
    if v.gcm.entries != g.entries or w.gcm.entries != g.entries:
        raise UnsupportedRank(f"elements must lie in W(A_{model.n - 1})")
    if not weyl.bruhat_leq(v, w):
        raise NotComparable(f"{v} is not below {w}")
    I = _ideal(model, v, w, p)
    comps = []
    for c in weyl.covers_in_interval(v, w):
        comps.append(("V", c.upper, _ideal(model, c.upper, w, p)))
    for c in weyl.cocovers_in_interval(v, w):
        comps.append(("W", c.lower, _ideal(model, v, c.lower, p)))
    key = ("boundary", v.word, w.word, p)
    if key not in model._cache:
        model._cache[key] = intersect_all([c[2] for c in comps], model.ring_mod(p))
    return RichardsonIdeals(I, model._cache[key], tuple(comps))
