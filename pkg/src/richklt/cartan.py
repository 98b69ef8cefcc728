"""Generalized Cartan matrices, symmetrizers and real roots.

Convention: ``entries[i][j] = <alpha_j, alpha_i^vee>``.  Roots are integer
vectors in the simple-root basis, coroots in the simple-coroot basis, weights
in the fundamental-weight basis (coordinate ``i`` is the value on
``alpha_i^vee``).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Optional, Sequence

from .errors import DimensionMismatch, NotGCM, NotSymmetrizable

__all__ = [
    "GCM", "RootCorootPair", "validate_gcm", "parse_gcm", "builtin_gcm",
    "real_root_orbit", "pair", "rho", "root_pairing", "reflect_root",
    "reflect_coroot", "reflect_weight", "height",
]


@dataclass(frozen=True)
class GCM:
    rank: int
    entries: tuple[tuple[int, ...], ...]
    symmetrizer: Optional[tuple[int, ...]] = None

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def is_finite_type_a(self) -> bool:
        return self.entries == type_a(self.rank).entries


@dataclass(frozen=True)
class RootCorootPair:
    root: tuple[int, ...]
    coroot: tuple[int, ...]
    positive: bool = True


def _symmetrizer(a: Sequence[Sequence[int]]) -> tuple[int, ...]:
    n = len(a)
    d: list[Optional[Fraction]] = [None] * n
    components = []
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp = [start]
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j == i or a[i][j] == 0 or d[j] is not None:
                    continue
                # d_i a_ij = d_j a_ji
                d[j] = d[i] * a[i][j] / a[j][i]
                comp.append(j)
                queue.append(j)
        components.append(comp)
    for i in range(n):
        for j in range(n):
            if d[i] * a[i][j] != d[j] * a[j][i]:
                raise NotSymmetrizable(f"cycle condition fails at ({i + 1}, {j + 1})")
    out = [0] * n
    for comp in components:
        den = lcm(*(d[i].denominator for i in comp))
        ints = [int(d[i] * den) for i in comp]
        g = gcd(*ints)
        for i, v in zip(comp, ints):
            out[i] = v // g
    return tuple(out)


def validate_gcm(matrix) -> GCM:
    """Check the GCM axioms and attach the symmetrizer.

    >>> validate_gcm([[2, -1], [-2, 2]]).symmetrizer
    (2, 1)
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotGCM("matrix must be square and nonempty")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                if isinstance(x, (float, Fraction)) and x == int(x):
                    continue
                raise NotGCM(f"non-integer entry {x!r}")
    rows = [[int(x) for x in r] for r in rows]
    for i in range(n):
        if rows[i][i] != 2:
            raise NotGCM(f"diagonal entry ({i + 1},{i + 1}) is {rows[i][i]}, not 2")
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise NotGCM(f"positive off-diagonal entry at ({i + 1},{j + 1})")
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise NotGCM(f"zero pattern not symmetric at ({i + 1},{j + 1})")
    return GCM(n, tuple(tuple(r) for r in rows), _symmetrizer(rows))


def parse_gcm(text: str) -> GCM:
    """Parse ``"2 -1; -1 2"`` or a JSON array of arrays."""
    text = text.strip()
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise NotGCM(f"bad JSON matrix: {exc}") from None
        return validate_gcm(data)
    try:
        rows = [[int(tok) for tok in row.split()] for row in text.split(";") if row.strip()]
    except ValueError:
        raise NotGCM(f"bad matrix text {text!r}") from None
    return validate_gcm(rows)


def type_a(rank: int) -> GCM:
    rows = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(rank)]
            for i in range(rank)]
    return GCM(rank, tuple(tuple(r) for r in rows), (1,) * rank)


_BUILTINS = {
    "B2": [[2, -1], [-2, 2]],
    "A1~": [[2, -2], [-2, 2]],
}


def builtin_gcm(name: str) -> GCM:
    """Named matrices: ``A<n>``, ``B2`` and the affine ``A1~``."""
    if name in _BUILTINS:
        return validate_gcm(_BUILTINS[name])
    if name.startswith("A") and name[1:].isdigit() and int(name[1:]) >= 1:
        return validate_gcm(type_a(int(name[1:])).as_lists())
    raise NotGCM(f"unknown builtin type {name!r}")


def height(vec: Sequence[int]) -> int:
    return sum(vec)


def root_pairing(g: GCM, root: Sequence[int], coroot: Sequence[int]) -> int:
    """``<root, coroot>`` for a root-lattice and a coroot-lattice vector."""
    n = g.rank
    return sum(coroot[i] * root[j] * g.entries[i][j] for i in range(n) for j in range(n))


def reflect_root(g: GCM, i: int, root: Sequence[int]) -> tuple[int, ...]:
    """Apply ``s_i`` (0-based) to a vector in the simple-root basis."""
    c = sum(root[j] * g.entries[i][j] for j in range(g.rank))
    out = list(root)
    out[i] -= c
    return tuple(out)


def reflect_coroot(g: GCM, i: int, coroot: Sequence[int]) -> tuple[int, ...]:
    c = sum(coroot[j] * g.entries[j][i] for j in range(g.rank))
    out = list(coroot)
    out[i] -= c
    return tuple(out)


def reflect_weight(g: GCM, i: int, weight: Sequence[int]) -> tuple[int, ...]:
    """Apply ``s_i`` to a weight in fundamental-weight coordinates."""
    c = weight[i]
    return tuple(weight[j] - c * g.entries[j][i] for j in range(g.rank))


def rho(g: GCM) -> tuple[int, ...]:
    return (1,) * g.rank


def pair(weight: Sequence[int], coroot: Sequence[int]) -> int:
    """``<weight, coroot>`` as a dot product of fundamental/coroot coordinates."""
    if len(weight) != len(coroot):
        raise DimensionMismatch(f"weight has {len(weight)} coordinates, coroot {len(coroot)}")
    return sum(a * b for a, b in zip(weight, coroot))


@lru_cache(maxsize=None)
def _orbit_records(g: GCM, height_bound: int):
    """Positive real roots up to ``height_bound``.

    Maps root -> (coroot, word u, simple index i) with root = u(alpha_i); the
    coroot is produced by the same reflection sequence acting on alpha_i^vee.
    Every positive real root of height > 1 is s_j of a lower positive root, so
    growing the orbit by height never needs to leave the bound.
    """
    n = g.rank
    table = {}
    queue = deque()
    for i in range(n):
        e = tuple(int(j == i) for j in range(n))
        if height_bound >= 1:
            table[e] = (e, (), i)
            queue.append(e)
    while queue:
        root = queue.popleft()
        coroot, word, i = table[root]
        for j in range(n):
            new = reflect_root(g, j, root)
            if any(x < 0 for x in new) or height(new) > height_bound or new in table:
                continue
            table[new] = (reflect_coroot(g, j, coroot), (j,) + word, i)
            queue.append(new)
    return table


def real_root_orbit(g: GCM, height_bound: int) -> list[RootCorootPair]:
    recs = _orbit_records(g, height_bound)
    pairs = [RootCorootPair(r, recs[r][0], True) for r in recs]
    pairs.sort(key=lambda p: (height(p.root), p.root))
    return pairs


def root_lookup(g: GCM, root: Sequence[int]):
    """``(coroot, word, i)`` for a positive real root, else ``None``."""
    root = tuple(root)
    if any(x < 0 for x in root) or height(root) < 1:
        return None
    return _orbit_records(g, height(root)).get(root)
