from fractions import Fraction as F
from itertools import product

import pytest
import sympy

from richklt import bsdh, weyl
from richklt.bsdh import (BSWord, Chart, boundary_valuations, chart_matrix, divisor_chart,
                          schubert_discrepancies, section_pullback)
from richklt.cartan import type_a
from richklt.errors import IndexOutOfRange, NotDominant, NotReduced, NTooSmall, SectionIdenticallyZero
from richklt.fsplit.plucker import det, permutation
from richklt.weyl import all_elements, identity

from oracles import reduced_words


def _strs(M):
    return [[str(x) for x in row] for row in M]


def test_chart_matrices():
    w = BSWord(2, (1,))
    assert _strs(chart_matrix(Chart(w, (1,)))) == [["z1", "-1"], ["1", "0"]]
    assert _strs(chart_matrix(Chart(w, (0,)))) == [["1", "0"], ["z1", "1"]]
    e = BSWord(3, ())
    assert _strs(chart_matrix(Chart(e, ()))) == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    with pytest.raises(IndexOutOfRange):
        BSWord(3, (3,))


def _all_words(n, max_len):
    for k in range(max_len + 1):
        yield from product(range(1, n), repeat=k)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_chart_determinant(n):
    for letters in _all_words(n, 3):
        word = BSWord(n, letters)
        for tau in product((0, 1), repeat=len(letters)):
            d = det(chart_matrix(Chart(word, tau)))
            assert str(d) in ("1", "-1")


def test_section_examples():
    w = BSWord(2, (1,))
    s1 = weyl.canonicalize(type_a(1), (1,))
    assert str(section_pullback(Chart(w, (0,)), s1, (1,))) == "z1"
    assert str(section_pullback(Chart(w, (1,)), s1, (1,))) == "1"
    with pytest.raises(NotDominant):
        section_pullback(Chart(w, (0,)), s1, (-1,))


@pytest.mark.parametrize("n", [3, 4])
def test_theta_at_base_point_and_fixed_point(n):
    # all lowered at z = 0 is the base point; all raised at z = 0 is the fixed point of w
    g = type_a(n - 1)
    rho = (1,) * (n - 1)
    for letters in _all_words(n, 3):
        word = BSWord(n, letters)
        m = len(letters)
        low = section_pullback(Chart(word, (0,) * m), identity(g), rho)
        assert low.terms.get((0,) * m, 0) in (1, -1)
        high = section_pullback(Chart(word, (1,) * m), identity(g), rho)
        at_w = high.terms.get((0,) * m, 0)
        assert (at_w != 0) == (word.element().length == 0)


def test_valuation_examples():
    assert boundary_valuations(BSWord(2, (1,)), "1", (1,)).values == {1: 1}
    # right reflections: 12 = 2 s_theta and 12 = 1 s_2
    assert boundary_valuations(BSWord(3, (1, 2)), "1 2", (1, 1)).values == {1: 2, 2: 1}
    assert boundary_valuations(BSWord(3, (1, 2, 1)), "1 2 1", (1, 1)).values == {1: 1, 2: 2, 3: 1}


def test_identically_zero_section():
    with pytest.raises(SectionIdenticallyZero):
        boundary_valuations(BSWord(3, (1,)), "2", (1, 1))


def _sympy_chart(n, letters, tau, sign=1):
    zs = sympy.symbols(f"z1:{len(letters) + 1}")
    M = sympy.eye(n)
    for k, (i, up) in enumerate(zip(letters, tau)):
        if up:
            S = sympy.eye(n)
            S[i - 1, i - 1] = S[i, i] = 0
            S[i, i - 1], S[i - 1, i] = sign, -sign
            U = sympy.eye(n)
            U[i - 1, i] = zs[k]
            M = M * U * S
        else:
            L = sympy.eye(n)
            L[i, i - 1] = zs[k]
            M = M * L
    return M, zs


def _sympy_valuation(n, letters, perm, lam, k):
    tau = tuple(0 if j == k else 1 for j in range(1, len(letters) + 1))
    M, zs = _sympy_chart(n, letters, tau)
    f = sympy.Integer(1)
    for i in range(1, n):
        rows = sorted(perm[:i])
        f *= M.extract([r - 1 for r in rows], list(range(i))).det() ** lam[i - 1]
    p = sympy.Poly(sympy.expand(f), zs[k - 1])
    return min(m[0] for m in p.monoms())


def test_valuations_match_sympy_oracle():
    n = 3
    g = type_a(n - 1)
    for w in all_elements(g):
        for letters in reduced_words(g, w):
            for u in all_elements(g):
                if not weyl.bruhat_leq(u, w):
                    continue
                table = boundary_valuations(BSWord(n, letters), u, (1, 2))
                for k in range(1, len(letters) + 1):
                    assert table.values[k] == _sympy_valuation(n, letters, permutation(u.word, n), (1, 2), k)


@pytest.mark.parametrize("n", [3, 4])
def test_birational_valuations_follow_right_covers(n):
    g = type_a(n - 1)
    rho = (1,) * (n - 1)
    for w in all_elements(g):
        for letters in reduced_words(g, w):
            word = BSWord(n, letters)
            vals = boundary_valuations(word, w, rho).values
            for k in range(1, len(letters) + 1):
                u = bsdh.complement_element(word, k)
                if u.length == w.length - 1:
                    assert vals[k] == weyl.cover_reflection(u, w, side="right").rho_pairing


@pytest.mark.parametrize("n", [3, 4])
def test_two_rho_valuations_positive(n):
    g = type_a(n - 1)
    for w in all_elements(g):
        for letters in reduced_words(g, w)[:3]:
            vals = boundary_valuations(BSWord(n, letters), w, (2,) * (n - 1)).values
            assert all(v >= 1 for v in vals.values())


def test_lift_sign_invariance():
    g = type_a(3)
    for w in all_elements(g):
        for letters in reduced_words(g, w)[:2]:
            word = BSWord(4, letters)
            a = boundary_valuations(word, w, (1, 2, 1)).values
            b = boundary_valuations(word, w, (1, 2, 1), lift_sign=-1).values
            assert a == b


def test_schubert_discrepancy_examples():
    r = schubert_discrepancies(BSWord(2, (1,)), 2)
    assert [(d.kind, d.e) for d in r.divisors] == [("strict", 0)]
    assert r.report.classification == "KLT" and r.consistent
    r = schubert_discrepancies(BSWord(3, (1, 2)), 3)
    assert [(d.kind, d.e) for d in r.divisors] == [("strict", 0), ("strict", 0)]
    r = schubert_discrepancies(BSWord(3, (1, 2, 1)), 3)
    assert [(d.kind, d.e) for d in r.divisors] == [("strict", 0), ("exceptional", F(-1, 3)), ("strict", 0)]
    r = schubert_discrepancies(BSWord(3, (1, 2, 1)), 2)
    assert r.divisors[1].e == 0 and r.divisors[1].e > -1


def test_schubert_bookkeeping_terms():
    d = schubert_discrepancies(BSWord(3, (1, 2)), 3).divisors
    assert [(x.val_theta, x.val_chi, x.b) for x in d] == [(0, 2, 2), (0, 1, 1)]
    assert [x.canonical for x in d] == [-1, -1]
    assert [x.pullback for x in d] == [F(-2, 3), F(-1, 3)]
    assert [x.delta for x in d] == [F(1, 3), F(2, 3)]


def test_schubert_errors():
    with pytest.raises(NotReduced):
        schubert_discrepancies(BSWord(3, (1, 1)), 3)
    with pytest.raises(NTooSmall):
        schubert_discrepancies(BSWord(3, (1, 2)), 2)


@pytest.mark.parametrize("n", [3, 4])
def test_schubert_corpus_klt(n):
    g = type_a(n - 1)
    for w in all_elements(g):
        for letters in reduced_words(g, w):
            r = schubert_discrepancies(BSWord(n, letters), n)
            assert r.consistent
            assert all(x.e > -1 for x in r.divisors)
            assert all(x.val_theta == 0 for x in r.divisors)
            assert r.report.classification == "KLT"


def test_json_shape():
    js = schubert_discrepancies(BSWord(3, (1, 2, 1)), 3).to_json()
    assert js["valuations"] == {"1": 1, "2": 2, "3": 1}
    assert js["discrepancies"][1] == {"k": 2, "kind": "exceptional", "e": {"num": -1, "den": 3}}
