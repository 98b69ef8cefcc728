"""Ideal arithmetic on top of Groebner bases.

Ideals are passed around as lists of polynomials (or a ``GroebnerBasis``);
every operation returns a reduced Groebner basis in the input ring.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence, Union

from ..errors import WrongField
from .groebner import GroebnerBasis, divide, groebner
from .poly import Poly, PolyRing

__all__ = [
    "Ideal", "eliminate", "intersect", "intersect_all", "colon", "colon_poly",
    "bracket_power", "dimension", "is_subset", "same_ideal",
]

Ideal = Union[Sequence[Poly], GroebnerBasis]


def _gens(I: Ideal) -> list[Poly]:
    return [g for g in I if g]


def eliminate(gens: Sequence[Poly], names: Sequence[str], ring: PolyRing) -> GroebnerBasis:
    """``(gens) ∩ k[remaining variables]`` where ``gens`` live in a ring
    whose first block of variables are ``names``.

    ``ring`` is the target ring: the variables other than ``names`` in order.
    """
    big = ring.with_elim(names)
    k = len(names)
    lifted = [g.map_to(big) for g in gens]
    G = groebner(lifted, big)
    keep = [g for g in G if all(x == 0 for x in g.lm()[:k])]
    back = [big.names.index(n) for n in ring.names]
    out = []
    for g in keep:
        out.append(ring.poly({tuple(e[i] for i in back): c for e, c in g.terms.items()}))
    return GroebnerBasis(ring, tuple(out))


def intersect(I: Ideal, J: Ideal, ring: PolyRing) -> GroebnerBasis:
    """``I ∩ J`` as ``(t I + (1 - t) J) ∩ k[x]``."""
    I, J = _gens(I), _gens(J)
    if not I or not J:
        return GroebnerBasis(ring, ())
    big = ring.with_elim(["_t"])
    t = big.var(0)
    gens = [t * g.map_to(big) for g in I] + [(1 - t) * g.map_to(big) for g in J]
    G = groebner(gens, big)
    out = [ring.poly({e[1:]: c for e, c in g.terms.items()}) for g in G if g.lm()[0] == 0]
    return groebner(out, ring) if out else GroebnerBasis(ring, ())


def intersect_all(ideals: Sequence[Ideal], ring: PolyRing) -> GroebnerBasis:
    """Intersection of a list of ideals; the empty intersection is the unit ideal."""
    if not ideals:
        return GroebnerBasis(ring, (ring.one(),))
    acc = groebner(_gens(ideals[0]), ring) if _gens(ideals[0]) else GroebnerBasis(ring, ())
    for I in ideals[1:]:
        acc = intersect(acc, I, ring)
    return acc


def colon_poly(J: Ideal, g: Poly, ring: PolyRing) -> GroebnerBasis:
    """``(J : g) = (J ∩ (g)) / g``."""
    if not g:
        return GroebnerBasis(ring, (ring.one(),))
    J = _gens(J)
    if not J:
        return GroebnerBasis(ring, ())
    inter = intersect(J, [g], ring)
    quotients = []
    for h in inter:
        q, r = divide(h, [g])
        assert r.is_zero(), "element of (g) not divisible by g"
        quotients.append(q[0])
    return groebner(quotients, ring)


def colon(J: Ideal, I: Ideal, ring: PolyRing) -> GroebnerBasis:
    """``(J : I) = ∩_g (J : g)`` over the generators ``g`` of ``I``."""
    I = _gens(I)
    if not I:
        return GroebnerBasis(ring, (ring.one(),))
    return intersect_all([colon_poly(J, g, ring) for g in I], ring)


def bracket_power(I: Ideal, e: int = 1) -> list[Poly]:
    """Generators ``g^(p^e)`` of the Frobenius power ``I^[p^e]``."""
    gens = _gens(I)
    if not gens:
        return []
    p = gens[0].ring.characteristic
    if not p:
        raise WrongField("bracket powers need a prime field")
    q = p ** e
    out = []
    for g in gens:
        # in characteristic p, (sum c m)^q = sum c^q m^q and c^q = c in F_p
        out.append(g.ring.poly({tuple(x * q for x in m): c for m, c in g.terms.items()}))
    return out


def is_subset(I: Ideal, J: Ideal, ring: PolyRing) -> bool:
    G = J if isinstance(J, GroebnerBasis) else groebner(_gens(J), ring)
    return all(G.contains(f) for f in _gens(I))


def same_ideal(I: Ideal, J: Ideal, ring: PolyRing) -> bool:
    return is_subset(I, J, ring) and is_subset(J, I, ring)


def dimension(G: GroebnerBasis) -> int:
    """Krull dimension of ``k[x]/I`` from the leading-term ideal.

    Largest set of variables containing the support of no leading monomial.
    """
    ring = G.ring
    n = ring.nvars
    if G.is_unit():
        return -1
    supports = [frozenset(i for i, x in enumerate(lm) if x) for lm in G.leading_monomials()]
    for size in range(n, -1, -1):
        for U in combinations(range(n), size):
            U = frozenset(U)
            if not any(s <= U for s in supports):
                return size
    return 0
