"""Divisor data on Richardson varieties and KLT certificates.

The boundary of ``X^v_w`` is the union of ``X^{v'}_w`` over covers
``v < v' <= w`` and ``X^v_{w'}`` over cocovers ``v <= w' < w``.  The section
of ``L(2 rho)`` whose zero set is the boundary vanishes along each component
to order ``b = <rho, beta^vee>``, where the cover is read as a right
multiplication: ``v' = v s_beta`` or ``w = w' s_beta``.  Reading covers on the
left gives the same multiset on small intervals but wrong individual orders;
the right reading is the one confirmed by the chart valuations in ``bsdh``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import cartan, weyl
from .errors import DimensionZero, DimensionMismatch, LengthMismatch, NotComparable, NotDominant, NTooSmall
from .weyl import CoverDatum, WeylElement

__all__ = [
    "BoundaryComponent", "PairDatum", "DiscrepancyReport", "DegreeReport", "KLTCertificate",
    "boundary", "pair_datum", "chevalley_degree", "degree_identity_check",
    "discrepancy_eval", "lc_shrink_check", "certify", "classify",
    "KLT", "LOG_CANONICAL", "NEITHER",
]

KLT = "KLT"
LOG_CANONICAL = "LogCanonical"
NEITHER = "Neither"

COVER_SIDE = "right"


@dataclass(frozen=True)
class BoundaryComponent:
    side: str                       # "V" or "W"
    element: WeylElement
    cover: CoverDatum
    b: int

    def interval(self, v: WeylElement, w: WeylElement) -> tuple[WeylElement, WeylElement]:
        return (self.element, w) if self.side == "V" else (v, self.element)

    def to_json(self) -> dict:
        return {"side": self.side, "element": list(self.element.word),
                "root": list(self.cover.root), "coroot": list(self.cover.coroot), "b": self.b}


@dataclass(frozen=True)
class PairDatum:
    v: WeylElement
    w: WeylElement
    components: tuple[BoundaryComponent, ...]
    N: int
    delta: tuple[Fraction, ...]
    k_plus_delta: tuple[Fraction, ...]


@dataclass(frozen=True)
class DiscrepancyReport:
    entries: list                   # (label, kind, coefficient)
    classification: str

    def to_json(self) -> dict:
        return {
            "entries": [{"label": lab, "kind": kind, "e": _frac(e)} for lab, kind, e in self.entries],
            "verdict": self.classification,
        }


@dataclass(frozen=True)
class DegreeReport:
    lhs: int
    rhs: int
    v_side: int
    w_side: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def one_sided_passed(self) -> bool:
        return self.lhs == self.v_side == self.w_side


@dataclass(frozen=True)
class KLTCertificate:
    pair: PairDatum
    ample_check: tuple[bool, ...]
    degree_identity: Optional[DegreeReport]
    fpure_evidence: tuple[tuple[int, bool], ...] = field(default=())

    @property
    def passed(self) -> bool:
        deg = self.degree_identity is None or (self.degree_identity.passed
                                               and self.degree_identity.one_sided_passed)
        return all(self.ample_check) and deg and all(ok for _, ok in self.fpure_evidence)

    def to_json(self) -> dict:
        p = self.pair
        d = self.degree_identity
        return {
            "gcm": p.v.gcm.as_lists(),
            "v": list(p.v.word),
            "w": list(p.w.word),
            "components": [c.to_json() for c in p.components],
            "N": p.N,
            "delta": [_frac(x) for x in p.delta],
            "degree": None if d is None else {"lhs": d.lhs, "rhs": d.rhs, "pass": d.passed},
            "ample": all(self.ample_check),
            "fpure": [{"p": q, "pass": ok} for q, ok in self.fpure_evidence],
            "verdict": "PASS" if self.passed else "FAIL",
        }


def _frac(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _require_leq(v: WeylElement, w: WeylElement) -> None:
    if not weyl.bruhat_leq(v, w):
        raise NotComparable(f"{weyl._fmt(v)} is not below {weyl._fmt(w)}")


def boundary(v: WeylElement, w: WeylElement) -> list[BoundaryComponent]:
    """Boundary components of ``X^v_w``: V-side first, each side in word order."""
    _require_leq(v, w)
    out = [BoundaryComponent("V", c.upper, c, c.rho_pairing)
           for c in weyl.covers_in_interval(v, w, side=COVER_SIDE)]
    out += [BoundaryComponent("W", c.lower, c, c.rho_pairing)
            for c in weyl.cocovers_in_interval(v, w, side=COVER_SIDE)]
    return out


def pair_datum(v: WeylElement, w: WeylElement, N: Optional[int] = None) -> PairDatum:
    comps = tuple(boundary(v, w))
    bmax = max((c.b for c in comps), default=0)
    if N is None:
        N = bmax + 1
    if N < 1 or N <= bmax:
        raise NTooSmall(f"N={N} must exceed every b_i (max {bmax})")
    delta = tuple(1 - Fraction(c.b, N) for c in comps)
    kd = tuple(Fraction(-c.b, N) for c in comps)
    return PairDatum(v, w, comps, N, delta, kd)


@lru_cache(maxsize=None)
def _degree(v: WeylElement, w: WeylElement, lam: tuple[int, ...]) -> int:
    if v == w:
        return 1
    total = 0
    for c in weyl.covers_in_interval(v, w, side=COVER_SIDE):
        total += cartan.pair(lam, c.coroot) * _degree(c.upper, w, lam)
    return total


def _check_weight(g, lam) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if len(lam) != g.rank:
        raise DimensionMismatch(f"weight has {len(lam)} coordinates, rank is {g.rank}")
    if any(x < 0 for x in lam):
        raise NotDominant(f"{list(lam)} is not dominant")
    return lam


def chevalley_degree(v: WeylElement, w: WeylElement, lam: Sequence[int]) -> int:
    """Sum over maximal chains ``v = u_0 < ... < u_r = w`` of ``prod <lam, beta_k^vee>``."""
    _require_leq(v, w)
    return _degree(v, w, _check_weight(v.gcm, lam))


def _two_rho(g) -> tuple[int, ...]:
    return tuple(2 * x for x in cartan.rho(g))


def degree_identity_check(v: WeylElement, w: WeylElement) -> DegreeReport:
    """``deg X^v_w = sum b_i deg X_i`` under ``L(2 rho)``, plus one-sided versions."""
    _require_leq(v, w)
    if w.length - v.length < 1:
        raise DimensionZero("a point has no divisor decomposition")
    lam = _two_rho(v.gcm)
    lhs = chevalley_degree(v, w, lam)
    rhs = 0
    for c in boundary(v, w):
        lo, hi = c.interval(v, w)
        rhs += c.b * chevalley_degree(lo, hi, lam)
    # one cover step on the V side or on the W side, each with the 2 rho pairing
    v_side = sum(cartan.pair(lam, c.coroot) * chevalley_degree(c.upper, w, lam)
                 for c in weyl.covers_in_interval(v, w, side=COVER_SIDE))
    w_side = sum(cartan.pair(lam, c.coroot) * chevalley_degree(v, c.lower, lam)
                 for c in weyl.cocovers_in_interval(v, w, side=COVER_SIDE))
    return DegreeReport(lhs, rhs, v_side, w_side)


def classify(coeffs: Sequence[Fraction]) -> str:
    if all(e > -1 for e in coeffs):
        return KLT
    if all(e >= -1 for e in coeffs):
        return LOG_CANONICAL
    return NEITHER


def discrepancy_eval(N: int, stricts: Sequence[tuple[str, int]],
                     exceptionals: Sequence[tuple[str, int]]) -> DiscrepancyReport:
    """Coefficients ``e_j = d_j/N - 1`` on exceptional divisors.

    Strict transforms carry coefficient 0 (their weight sits in the boundary
    part, not in the correction divisor).  The verdict reads the exceptional
    coefficients only.

    >>> discrepancy_eval(3, [], [("E1", 0)]).classification
    'LogCanonical'
    """
    if any(N <= b for _, b in stricts) or N < 1:
        raise NTooSmall(f"N={N} must exceed every strict b_i")
    entries = [(lab, "strict", Fraction(0)) for lab, _ in stricts]
    exc = []
    for lab, d in exceptionals:
        if d < 0:
            raise ValueError(f"multiplicity {d} of {lab} is negative")
        e = Fraction(d, N) - 1
        exc.append(e)
        entries.append((lab, "exceptional", e))
    return DiscrepancyReport(entries, classify(exc))


def lc_shrink_check(a: Sequence[Fraction], c: Sequence[Fraction]) -> bool:
    """Whether ``c`` is a strict shrinking of the log canonical boundary ``a``:
    every ``c_i`` in ``[0, 1)`` and ``c_i < a_i``."""
    if len(a) != len(c):
        raise LengthMismatch(f"{len(a)} coefficients against {len(c)}")
    return all(0 <= ci < 1 and ci < ai for ai, ci in zip(map(Fraction, a), map(Fraction, c)))


def _fpure_evidence(v: WeylElement, w: WeylElement, primes: Sequence[int]):
    g = v.gcm
    if not primes or not g.is_finite_type_a() or g.rank + 1 > 4:
        return ()
    from .fsplit import compatible_fpure_test, flag_plucker_model, richardson_ideal
    model = flag_plucker_model(g.rank + 1)
    out = []
    for p in primes:
        ideals = richardson_ideal(model, v, w, p)
        rep = compatible_fpure_test(ideals.ideal, ideals.boundary, p, model.ring_mod(p))
        out.append((p, rep.passed))
    return tuple(out)


def certify(v: WeylElement, w: WeylElement, N: Optional[int] = None,
            primes: Sequence[int] = ()) -> KLTCertificate:
    """Assemble the pair, ampleness of ``-N(K + Delta)``, degree and F-purity checks."""
    pair = pair_datum(v, w, N)
    lam = _two_rho(v.gcm)
    ample = tuple(x > 0 for x in lam)
    degree = degree_identity_check(v, w) if w.length > v.length else None
    return KLTCertificate(pair, ample, degree, _fpure_evidence(v, w, primes))
