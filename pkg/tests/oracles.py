"""Independent reference implementations used only by the tests."""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

from richklt import weyl


def subword_leq(v, w):
    """v <= w iff some reduced word of v is a subword of the canonical word of w."""
    k = v.length
    for pos in combinations(range(w.length), k):
        sub = tuple(w.word[p] for p in pos)
        if weyl.canonicalize(w.gcm, sub).word == v.word:
            return True
    return False


def perm_length(p):
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def perm_leq(u, w):
    """Tableau (rank matrix) criterion for Bruhat order on S_n."""
    n = len(u)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if sum(1 for a in range(i) if u[a] >= j) > sum(1 for a in range(i) if w[a] >= j):
                return False
    return True


def perm_chain_count(n):
    P = list(permutations(range(1, n + 1)))
    top = n * (n - 1) // 2

    @lru_cache(maxsize=None)
    def count(u):
        if perm_length(u) == top:
            return 1
        return sum(count(x) for x in P if perm_length(x) == perm_length(u) + 1 and perm_leq(u, x))

    return count(tuple(range(1, n + 1)))


def coroot_from_form(g, root):
    """beta^vee = 2 sum d_i c_i alpha_i^vee / (beta, beta) with (alpha_i, alpha_j) = d_i a_ij."""
    d = g.symmetrizer
    r = g.rank
    norm = sum(root[i] * root[j] * d[i] * g.entries[i][j] for i in range(r) for j in range(r))
    return tuple(Fraction(2 * d[i] * root[i], norm) for i in range(r))


def positive_roots_type_a(n):
    """Positive roots e_i - e_j of A_{n-1} in simple-root coordinates."""
    out = []
    for i in range(n - 1):
        for j in range(i + 1, n):
            out.append(tuple(1 if i <= k < j else 0 for k in range(n - 1)))
    return out


def flag_degree(g, lam, positive_roots):
    """Degree of G/B under L(lam) in simply laced finite type: l! prod <lam,b>/<rho,b>."""
    from math import factorial
    num = Fraction(factorial(len(positive_roots)))
    for b in positive_roots:
        num *= Fraction(sum(x * y for x, y in zip(lam, b)), sum(b))
    return num


def reduced_words(g, w):
    return [word for word in product(range(1, g.rank + 1), repeat=w.length)
            if weyl.canonicalize(g, word) == w]
