"""Fedder-type F-purity tests at the cone point of a graded quotient.

For a homogeneous ideal ``I`` of ``S = F_p[x_1..x_r]``, ``S/I`` is F-pure iff
``(I^[p] : I)`` is not contained in ``m^[p] = (x_1^p, ..., x_r^p)``.  A
common element of ``(I^[p] : I)`` and ``(J^[p] : J)`` outside ``m^[p]``
gives a splitting compatible with both ``V(I)`` and ``V(J)``.  Only ``e = 1``
is tested.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..errors import NotHomogeneous, NotNested, NotPrime
from .groebner import GroebnerBasis, groebner
from .ideals import Ideal, bracket_power, colon, intersect, is_subset
from .poly import Poly, PolyRing

__all__ = [
    "FedderReport", "CompatibleReport", "fedder_fpure", "compatible_fpure_test",
    "in_frobenius_maximal", "verify_witness", "SUPPORTED_PRIMES",
]

SUPPORTED_PRIMES = (2, 3, 5, 7)


@dataclass(frozen=True)
class FedderReport:
    p: int
    is_split: bool
    witness: Optional[Poly]
    colon: GroebnerBasis

    def to_json(self) -> dict:
        return {"p": self.p, "pass": self.is_split,
                "witness": None if self.witness is None else str(self.witness)}


@dataclass(frozen=True)
class CompatibleReport:
    p: int
    passed: bool
    witness: Optional[Poly]
    ambient_colon: GroebnerBasis
    sub_colon: GroebnerBasis
    common: GroebnerBasis

    def to_json(self) -> dict:
        return {"p": self.p, "pass": self.passed,
                "witness": None if self.witness is None else str(self.witness)}


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _to_field(I: Ideal, p: int, ring: PolyRing | None = None):
    gens = [g for g in I]
    if ring is None:
        if isinstance(I, GroebnerBasis):
            ring = I.ring
        elif gens:
            ring = gens[0].ring
        else:
            raise ValueError("ring required for an empty ideal")
    R = ring if ring.characteristic == p else ring.with_field(p)
    out = []
    for g in gens:
        if g.ring != R:
            g = R.poly(g.terms)
        if g:
            out.append(g)
    return R, out


def _check(p: int, gens: Sequence[Poly]) -> None:
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    for g in gens:
        if not g.is_homogeneous():
            raise NotHomogeneous(f"{g} is not homogeneous")


def in_frobenius_maximal(f: Poly, p: int) -> bool:
    """Membership in ``m^[p]``: every monomial has some exponent >= p."""
    return all(any(x >= p for x in e) for e in f.terms)


def _frob_colon(gens, R, p) -> GroebnerBasis:
    if not gens:
        return GroebnerBasis(R, (R.one(),))
    return colon(bracket_power(gens), gens, R)


def _witness(G: GroebnerBasis, p: int) -> Optional[Poly]:
    for g in G:
        if not in_frobenius_maximal(g, p):
            return g
    return None


def fedder_fpure(I: Ideal, p: int, ring: PolyRing | None = None) -> FedderReport:
    """F-purity of ``S/I`` at the irrelevant ideal.

    >>> R = PolyRing(["x", "y"], 2)
    >>> str(fedder_fpure([R.parse("x*y")], 2).witness)
    'x*y'
    """
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    R, gens = _to_field(I, p, ring)
    _check(p, gens)
    C = _frob_colon(gens, R, p)
    w = _witness(C, p)
    return FedderReport(p, w is not None, w, C)


def compatible_fpure_test(I: Ideal, J: Ideal, p: int, ring: PolyRing | None = None) -> CompatibleReport:
    """One splitting of ``S`` compatible with ``V(I)`` and ``V(J)``, ``I ⊆ J``."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    R, gi = _to_field(I, p, ring)
    _, gj = _to_field(J, p, R)
    _check(p, gi + gj)
    if not is_subset(gi, gj, R):
        raise NotNested("I is not contained in J")
    CI = _frob_colon(gi, R, p)
    CJ = _frob_colon(gj, R, p)
    common = intersect(CI, CJ, R)
    w = _witness(common, p)
    return CompatibleReport(p, w is not None, w, CI, CJ, common)


def verify_witness(u: Poly, I: Ideal, p: int) -> bool:
    """Re-check ``u I ⊆ I^[p]`` and ``u ∉ m^[p]`` by normal forms."""
    gens = [g for g in I if g]
    if in_frobenius_maximal(u, p):
        return False
    if not gens:
        return True
    G = groebner(bracket_power(gens), u.ring)
    return all(G.contains(u * g) for g in gens)
