"""Bott-Samelson charts in type A and valuations of extremal sections.

A word ``(i_1, ..., i_m)`` in ``W(A_{n-1})`` gives the resolution
``Z -> X_w``.  A chart picks, for each letter, either the raised factor
``(I + z_k E_{i,i+1}) s_i`` or the lowered factor ``I + z_k E_{i+1,i}``; the
product of the factors is the chart map to ``SL_n``.  The boundary divisor
``D_k = {z_k = 0}`` is read in the chart lowering letter ``k`` only.

Sections of ``L(lambda)`` pull back to products of column-initial minors:
the extremal section of weight ``-u(lambda)`` is
``prod_i det(g[u{1..i}, {1..i}]) ** lambda_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import weyl
from .cartan import type_a
from .errors import (IndexOutOfRange, NotDominant, NotReduced, NTooSmall,
                     SectionIdenticallyZero)
from .fsplit.plucker import det, permutation
from .fsplit.poly import Poly, PolyRing
from .richardson import DiscrepancyReport, classify

__all__ = [
    "BSWord", "Chart", "ValuationTable", "SchubertDivisor", "SchubertDiscrepancies",
    "chart_matrix", "section_pullback", "boundary_valuations", "schubert_discrepancies",
    "divisor_chart", "complement_element",
]


@dataclass(frozen=True)
class BSWord:
    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        for i in self.letters:
            if not 1 <= i <= self.n - 1:
                raise IndexOutOfRange(f"letter {i} outside 1..{self.n - 1}")

    @classmethod
    def parse(cls, n: int, text) -> "BSWord":
        return cls(n, weyl.parse_word(text))

    def __len__(self):
        return len(self.letters)

    @property
    def gcm(self):
        return type_a(self.n - 1)

    def element(self) -> weyl.WeylElement:
        return weyl.canonicalize(self.gcm, self.letters)

    def is_reduced(self) -> bool:
        return self.element().length == len(self.letters)

    def ring(self) -> PolyRing:
        return PolyRing([f"z{k}" for k in range(1, len(self.letters) + 1)], 0)


@dataclass(frozen=True)
class Chart:
    word: BSWord
    tau: tuple[int, ...]

    def __post_init__(self):
        if len(self.tau) != len(self.word.letters):
            raise ValueError("tau must have one bit per letter")


@dataclass(frozen=True)
class ValuationTable:
    word: BSWord
    label: str
    values: dict

    def to_json(self) -> dict:
        return {str(k): v for k, v in sorted(self.values.items())}


def divisor_chart(word: BSWord, k: int) -> Chart:
    """Chart lowering letter ``k`` (1-based) and raising every other letter."""
    return Chart(word, tuple(0 if j == k else 1 for j in range(1, len(word) + 1)))


def _identity(ring: PolyRing, n: int):
    return [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]


def _matmul(A, B):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = None
            for k in range(n):
                if A[i][k] and B[k][j]:
                    t = A[i][k] * B[k][j]
                    acc = t if acc is None else acc + t
            row.append(acc if acc is not None else A[0][0].ring.zero())
        out.append(row)
    return out


def chart_matrix(chart: Chart, lift_sign: int = 1):
    """Chart map as an ``n x n`` matrix over ``Q[z_1..z_m]``.

    ``lift_sign=-1`` uses the other rotation lift ``E_{i,i+1} - E_{i+1,i}``
    of ``s_i``.
    """
    word = chart.word
    n = word.n
    R = word.ring()
    M = _identity(R, n)
    for k, (i, raised) in enumerate(zip(word.letters, chart.tau)):
        z = R.var(k)
        a, b = i - 1, i
        if raised:
            F = _identity(R, n)
            F[a][a] = R.zero()
            F[b][b] = R.zero()
            F[b][a] = R.const(lift_sign)
            F[a][b] = R.const(-lift_sign)
            # (I + z E_{a,b}) F adds z * row b to row a
            F[a] = [x + z * y for x, y in zip(F[a], F[b])]
        else:
            F = _identity(R, n)
            F[b][a] = z
        M = _matmul(M, F)
    return M


def _as_perm(u, n: int) -> tuple[int, ...]:
    if isinstance(u, weyl.WeylElement):
        return permutation(u.word, n)
    return permutation(weyl.parse_word(u), n)


def section_pullback(chart: Chart, u, lam: Sequence[int], lift_sign: int = 1) -> Poly:
    n = chart.word.n
    lam = tuple(lam)
    if len(lam) != n - 1:
        raise IndexOutOfRange(f"weight needs {n - 1} coordinates")
    if any(c < 0 for c in lam):
        raise NotDominant(f"{lam} is not dominant")
    perm = _as_perm(u, n)
    M = chart_matrix(chart, lift_sign)
    R = chart.word.ring()
    out = R.one()
    for i in range(1, n):
        if lam[i - 1] == 0:
            continue
        rows = sorted(perm[:i])
        minor = det([[M[r - 1][c] for c in range(i)] for r in rows])
        if not isinstance(minor, Poly):
            minor = R.const(minor)
        out = out * minor ** lam[i - 1]
    return out


def boundary_valuations(word: BSWord, u, lam: Sequence[int], lift_sign: int = 1) -> ValuationTable:
    """Order of vanishing of the ``u``-extremal section along each ``D_k``."""
    values = {}
    for k in range(1, len(word) + 1):
        f = section_pullback(divisor_chart(word, k), u, lam, lift_sign)
        if f.is_zero():
            raise SectionIdenticallyZero(f"section for {u} vanishes on the chart of D_{k}")
        values[k] = f.valuation(k - 1)
    label = f"chi[{u}] lambda={list(lam)}"
    return ValuationTable(word, label, values)


def complement_element(word: BSWord, k: int) -> weyl.WeylElement:
    rest = word.letters[:k - 1] + word.letters[k:]
    return weyl.canonicalize(word.gcm, rest)


@dataclass(frozen=True)
class SchubertDivisor:
    k: int
    kind: str                      # "strict" or "exceptional"
    image: Optional[weyl.WeylElement]
    b: Optional[int]               # cocover multiplicity for strict divisors
    val_theta: int
    val_chi: int
    canonical: Fraction            # coefficient of D_k in K_Z
    pullback: Fraction             # coefficient of D_k in m^*(K + Delta)
    delta: Fraction                # coefficient of D_k in the strict transform of Delta
    e: Fraction


@dataclass(frozen=True)
class SchubertDiscrepancies:
    word: BSWord
    N: int
    divisors: tuple[SchubertDivisor, ...]
    report: DiscrepancyReport
    consistent: bool

    def to_json(self) -> dict:
        return {
            "word": list(self.word.letters),
            "N": self.N,
            "lambda": [1] * (self.word.n - 1),
            "valuations": {str(d.k): d.val_chi for d in self.divisors},
            "discrepancies": [
                {"k": d.k, "kind": d.kind, "e": {"num": d.e.numerator, "den": d.e.denominator}}
                for d in self.divisors
            ],
            "consistent": self.consistent,
            "verdict": self.report.classification,
        }


def schubert_discrepancies(word: BSWord, N: int) -> SchubertDiscrepancies:
    """Discrepancies of ``(X_w, Delta_w)`` along every ``D_k`` of ``Z -> X_w``.

    ``Delta_w = sum (1 - b'/N) X_{w'}`` over cocovers ``w' < w`` with
    ``b' = <rho, beta^vee>`` (right reflection ``w = w' s_beta``), so that
    ``K + Delta_w = -div(theta) - (1/N) div(chi_w)`` with ``theta`` the
    section of ``L(rho)`` of weight ``-rho``.  With the matching
    ``K_Z = -div(m^* theta) - dZ``, every ``D_k`` gets

        e_k = -1 + delta_k + val_k(m^* chi_w) / N,

    and a strict transform (complement reduced) must come out as exactly 0.
    """
    if not word.is_reduced():
        raise NotReduced(f"{list(word.letters)} is not reduced")
    w = word.element()
    e_id = weyl.identity(w.gcm)
    cocovers = {c.lower: c.rho_pairing for c in weyl.cocovers_in_interval(e_id, w, side="right")}
    if cocovers and N <= max(cocovers.values()):
        raise NTooSmall(f"N={N} must exceed every b' = {sorted(cocovers.values())}")
    if N < 1:
        raise NTooSmall("N must be positive")
    rho = (1,) * (word.n - 1)
    theta_vals = boundary_valuations(word, e_id, rho).values if len(word) else {}
    chi_vals = boundary_valuations(word, w, rho).values if len(word) else {}
    divisors = []
    seen = set()
    for k in range(1, len(word) + 1):
        image = complement_element(word, k)
        strict = image.length == len(word) - 1 and image not in seen
        if strict:
            seen.add(image)
        b = cocovers[image] if strict else None
        vt, vc = theta_vals[k], chi_vals[k]
        delta = Fraction(N - b, N) if strict else Fraction(0)
        canonical = Fraction(-vt - 1)
        pullback = Fraction(-vt) - Fraction(vc, N)
        e = canonical + delta - pullback
        divisors.append(SchubertDivisor(k, "strict" if strict else "exceptional",
                                        image if strict else None, b, vt, vc,
                                        canonical, pullback, delta, e))
    entries = [(f"D_{d.k}", d.kind, d.e) for d in divisors]
    consistent = all(d.e == 0 for d in divisors if d.kind == "strict")
    report = DiscrepancyReport(entries, classify([d.e for d in divisors]))
    return SchubertDiscrepancies(word, N, tuple(divisors), report, consistent)
