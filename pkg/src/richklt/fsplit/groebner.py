"""Buchberger's algorithm with the product and chain criteria."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .poly import Poly, PolyRing

__all__ = ["GroebnerBasis", "groebner", "normal_form", "divide", "spoly"]


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    gens: tuple[Poly, ...]
    reduced: bool = True

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def reduce(self, f: Poly) -> Poly:
        return normal_form(f, self.gens)

    def contains(self, f: Poly) -> bool:
        return normal_form(f, self.gens).is_zero()

    def is_unit(self) -> bool:
        return any(sum(g.lm()) == 0 for g in self.gens)

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.lm() for g in self.gens]

    def __str__(self):
        return "[" + ", ".join(map(str, self.gens)) + "]"


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _nkey(ring: PolyRing, e):
    return tuple(-x for x in ring.key(e))


def normal_form(f: Poly, basis: Sequence[Poly]) -> Poly:
    """Fully reduced remainder of ``f`` by ``basis`` (leading terms first)."""
    return divide(f, basis, quotients=False)[1]


def divide(f: Poly, basis: Sequence[Poly], quotients: bool = True):
    """Multivariate division; returns (quotients, remainder)."""
    ring = f.ring
    p = ring.characteristic
    basis = [g for g in basis if g]
    lms = [g.lm() for g in basis]
    lcinv = [ring.inv(g.lc()) for g in basis]
    tails = [[(e, c) for e, c in g.terms.items() if e != lm] for g, lm in zip(basis, lms)]
    quo = [dict() for _ in basis] if quotients else None
    coeffs = dict(f.terms)
    heap = [(_nkey(ring, e), e) for e in coeffs]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = coeffs.pop(e, 0)
        if not c:
            continue
        for k, lm in enumerate(lms):
            if _divides(lm, e):
                break
        else:
            rem[e] = c
            continue
        q = c * lcinv[k]
        if p:
            q %= p
        shift = tuple(a - b for a, b in zip(e, lm))
        if quotients:
            quo[k][shift] = q
        for ge, gc in tails[k]:
            ne = tuple(a + b for a, b in zip(ge, shift))
            old = coeffs.get(ne)
            v = (0 if old is None else old) - q * gc
            if p:
                v %= p
            if v:
                coeffs[ne] = v
                if old is None:
                    heapq.heappush(heap, (_nkey(ring, ne), ne))
            elif old is not None:
                del coeffs[ne]
    r = Poly(ring, rem)
    if quotients:
        return [Poly(ring, q) for q in quo], r
    return None, r


def spoly(f: Poly, g: Poly) -> Poly:
    a, b = f.lm(), g.lm()
    lcm = tuple(max(x, y) for x, y in zip(a, b))
    ring = f.ring
    sf = f.scale(ring.inv(f.lc()), tuple(x - y for x, y in zip(lcm, a)))
    sg = g.scale(ring.inv(g.lc()), tuple(x - y for x, y in zip(lcm, b)))
    return sf - sg


def _interreduce(polys: list[Poly]) -> list[Poly]:
    # drop elements whose leading monomial is divisible by another's
    polys = sorted((g.monic() for g in polys if g), key=lambda g: g.ring.key(g.lm()))
    minimal = []
    for g in polys:
        if not any(_divides(h.lm(), g.lm()) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(normal_form(g, others).monic())
    out.sort(key=lambda g: g.ring.key(g.lm()), reverse=True)
    return out


def groebner(gens: Sequence[Poly], ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are taken smallest lcm first; a pair is skipped when its leading
    monomials are coprime or when a third element's leading monomial divides
    the lcm and both connecting pairs are already settled.
    """
    gens = [g for g in gens if g]
    if ring is None:
        if not gens:
            raise ValueError("ring required for an empty generating set")
        ring = gens[0].ring
    if not gens:
        return GroebnerBasis(ring, ())
    G: list[Poly] = []
    pending: set[tuple[int, int]] = set()
    heap: list = []

    def add(h: Poly):
        h = h.monic()
        if sum(h.lm()) == 0:
            return True
        j = len(G)
        G.append(h)
        for i in range(j):
            lcm = tuple(max(x, y) for x, y in zip(G[i].lm(), h.lm()))
            pending.add((i, j))
            heapq.heappush(heap, (ring.key(lcm), i, j, lcm))
        return False

    for f in sorted(gens, key=lambda g: ring.key(g.lm())):
        if add(f):
            return GroebnerBasis(ring, (ring.one(),))

    while heap:
        _, i, j, lcm = heapq.heappop(heap)
        pending.discard((i, j))
        a, b = G[i].lm(), G[j].lm()
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _divides(G[k].lm(), lcm) and (min(i, k), max(i, k)) not in pending \
                    and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        h = normal_form(spoly(G[i], G[j]), G)
        if h and add(h):
            return GroebnerBasis(ring, (ring.one(),))
    return GroebnerBasis(ring, tuple(_interreduce(G)))
