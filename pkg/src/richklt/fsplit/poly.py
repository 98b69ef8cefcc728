"""Sparse multivariate polynomials over F_p or Q.

Monomials are exponent tuples.  The monomial order is degrevlex, optionally
refined into a two-block elimination order (degrevlex on the first ``elim``
variables, ties broken by degrevlex on the rest) for elimination.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from ..errors import RichKLTError, WrongField

__all__ = ["PolyRing", "Poly", "ParseError"]


class ParseError(RichKLTError):
    pass


@lru_cache(maxsize=1 << 16)
def _drl(exp: tuple[int, ...]) -> tuple[int, ...]:
    return (sum(exp),) + tuple(-x for x in reversed(exp))


class PolyRing:
    """Polynomial ring with named variables; ``characteristic=0`` means Q."""

    def __init__(self, names: Sequence[str], characteristic: int = 0, elim: int = 0):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.characteristic = int(characteristic)
        self.elim = int(elim)
        self._index = {n: i for i, n in enumerate(self.names)}
        if len(self._index) != self.nvars:
            raise ValueError("duplicate variable names")
        k = self.elim
        if k:
            self.key = lambda e: _drl(e[:k]) + _drl(e[k:])
        else:
            self.key = _drl
        self.zero_exp = (0,) * self.nvars

    # coefficient field
    def coerce(self, c):
        p = self.characteristic
        if p:
            if isinstance(c, Fraction):
                if c.denominator % p == 0:
                    raise WrongField(f"{c} has no image in F_{p}")
                return c.numerator * pow(c.denominator, -1, p) % p
            return int(c) % p
        return Fraction(c)

    def inv(self, c):
        p = self.characteristic
        if p:
            return pow(c, -1, p)
        return 1 / c

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic > 0

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.characteristic == other.characteristic and self.elim == other.elim)

    def __hash__(self):
        return hash((self.names, self.characteristic, self.elim))

    def __repr__(self):
        field = f"GF({self.characteristic})" if self.characteristic else "QQ"
        return f"PolyRing({field}, {list(self.names)})"

    # constructors
    def poly(self, terms: Mapping[tuple[int, ...], object] | None = None) -> "Poly":
        out = {}
        for e, c in (terms or {}).items():
            c = self.coerce(c)
            if c:
                out[tuple(e)] = c
        return Poly(self, out)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = self.coerce(c)
        return Poly(self, {self.zero_exp: c} if c else {})

    def var(self, name_or_index) -> "Poly":
        i = name_or_index if isinstance(name_or_index, int) else self._index[name_or_index]
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.coerce(1)})

    def gens(self) -> list["Poly"]:
        return [self.var(i) for i in range(self.nvars)]

    def index(self, name: str) -> int:
        return self._index[name]

    def with_field(self, characteristic: int) -> "PolyRing":
        return PolyRing(self.names, characteristic, self.elim)

    def with_elim(self, new_names: Sequence[str]) -> "PolyRing":
        """Ring with ``new_names`` prepended as an elimination block."""
        return PolyRing(tuple(new_names) + self.names, self.characteristic, len(new_names))

    def parse(self, text: str) -> "Poly":
        return _Parser(self, text).parse()


class Poly:
    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lm(self) -> tuple[int, ...]:
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.key)
        return self._lm

    def lc(self):
        return self.terms[self.lm()]

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, weights: Sequence[Sequence[int]] | None = None) -> bool:
        """Homogeneous for the standard grading, or for every given weight vector."""
        grades = weights or [[1] * self.ring.nvars]
        for w in grades:
            if len({sum(a * b for a, b in zip(w, e)) for e in self.terms}) > 1:
                return False
        return True

    def support(self) -> set[int]:
        return {i for e in self.terms for i, x in enumerate(e) if x}

    def valuation(self, i: int) -> int:
        """Lowest exponent of variable ``i`` (other variables generic)."""
        if not self.terms:
            raise ValueError("valuation of zero")
        return min(e[i] for e in self.terms)

    # arithmetic
    def _new(self, terms):
        return Poly(self.ring, terms)

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._lift(other)
        res = dict(self.terms)
        p = self.ring.characteristic
        for e, c in other.terms.items():
            v = res.get(e, 0) + c
            if p:
                v %= p
            if v:
                res[e] = v
            else:
                res.pop(e, None)
        return self._new(res)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.characteristic
        return self._new({e: (-c % p if p else -c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c, shift: tuple[int, ...] | None = None) -> "Poly":
        """``c * x^shift * self`` with ``c`` already a field element."""
        p = self.ring.characteristic
        if not c:
            return self._new({})
        if shift is None:
            return self._new({e: (c * v % p if p else c * v) for e, v in self.terms.items()})
        return self._new({tuple(a + b for a, b in zip(e, shift)): (c * v % p if p else c * v)
                          for e, v in self.terms.items()})

    def __mul__(self, other):
        other = self._lift(other)
        p = self.ring.characteristic
        res: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                res[e] = res.get(e, 0) + c1 * c2
        if p:
            res = {e: c % p for e, c in res.items()}
        return self._new({e: c for e, c in res.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(self.ring.inv(self.lc()))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        return self == self.ring.const(other)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_to(self, ring: PolyRing, index_map: Sequence[int] | None = None) -> "Poly":
        """Move into ``ring``; variable ``i`` goes to ``index_map[i]``."""
        if index_map is None:
            index_map = [ring.index(n) for n in self.ring.names]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, x in enumerate(e):
                if x:
                    ne[index_map[i]] += x
            out[tuple(ne)] = out.get(tuple(ne), 0) + c
        return ring.poly(out)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def _fmt_coeff(c, p):
    if p:
        c = int(c)
        if p > 2 and c > p // 2:
            c -= p
        return c
    return c


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    p = f.ring.characteristic
    parts = []
    for e, c in f.sorted_terms():
        c = _fmt_coeff(c, p)
        mono = "*".join(f"{n}^{x}" if x > 1 else n for n, x in zip(f.ring.names, e) if x)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][0-9]*)|(\*\*|[-+*^()/]))")


class _Parser:
    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.toks = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"cannot parse {text!r} at position {pos}")
            num, name, op = m.groups()
            if num is not None:
                self.toks.append(("num", int(num)))
            elif name is not None:
                self.toks.append(("var", name))
            else:
                self.toks.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> Poly:
        if not self.toks:
            raise ParseError("empty polynomial")
        f = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return f

    def expr(self):
        f = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.factor()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                f = f * self.factor()
            elif kind in ("num", "var") or (kind, val) == ("op", "("):
                f = f * self.factor()
            else:
                return f

    def factor(self):
        kind, val = self.peek()
        if (kind, val) == ("op", "-"):
            self.take()
            return -self.factor()
        base = self.base()
        if self.peek() == ("op", "^"):
            self.take()
            kind, k = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer")
            base = base ** k
        return base

    def base(self):
        kind, val = self.take()
        if kind == "num":
            return self.ring.const(val)
        if kind == "var":
            if val not in self.ring._index:
                raise ParseError(f"unknown variable {val!r}")
            return self.ring.var(val)
        if (kind, val) == ("op", "("):
            f = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError("missing ')'")
            return f
        raise ParseError(f"unexpected token {val!r}")


def parse_many(ring: PolyRing, texts: Iterable[str]) -> list[Poly]:
    return [ring.parse(t) for t in texts]
