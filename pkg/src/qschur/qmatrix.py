"""The quantum matrix algebra of n x n quantum matrices.

Elements are sparse sums of words in the generators x_ij with Laurent
coefficients.  Words are kept in a normal form: letters (i, j) sorted
nondecreasing in row-major lexicographic order, reached by the oriented
rewrite rules

    x_ij x_il -> q^-1 x_il x_ij              (same row,    j > l)
    x_ij x_kj -> q^-1 x_kj x_ij              (same column, i > k)
    x_ij x_kl -> x_kl x_ij                   (i > k, j < l)
    x_ij x_kl -> x_kl x_ij - (q - q^-1) x_kj x_il   (i > k, j > l)

The twisted variant with q replaced by q^-1 throughout (used for the
starred generators of the mixed algebra) is obtained by flipping a single
parameter.
"""

from __future__ import annotations

import itertools

from .laurent import LaurentPoly, ONE, Q, QINV, neg_q_power
from .linalg import RationalFn, SpanSolver
from .tableaux import (Tableau, Partition, content, enumerate_standard,
                       partitions, inversions)


class Rewriter:
    """Rewrites words of (i, j) letters to sorted normal form.

    qexp = +1 gives the plain algebra, qexp = -1 the q -> q^-1 twist.
    """

    def __init__(self, qexp=1):
        self.swap_coeff = LaurentPoly.q(-qexp)          # q^-1 (or q)
        self.extra_coeff = -(LaurentPoly.q(qexp) - LaurentPoly.q(-qexp))
        self.cache = {}

    def normal_word(self, word):
        """Normal form of a single word as a dict normal-word -> coeff."""
        hit = self.cache.get(word)
        if hit is not None:
            return hit
        p = -1
        for t in range(len(word) - 1):
            if word[t] > word[t + 1]:
                p = t
                break
        if p < 0:
            result = {word: ONE}
            self.cache[word] = result
            return result
        (i, j), (k, l) = word[p], word[p + 1]
        swapped = word[:p] + ((k, l), (i, j)) + word[p + 2:]
        if i == k or j == l:
            terms = [(self.swap_coeff, swapped)]
        elif j < l:
            terms = [(ONE, swapped)]
        else:
            extra = word[:p] + ((k, j), (i, l)) + word[p + 2:]
            terms = [(ONE, swapped), (self.extra_coeff, extra)]
        result = {}
        for coeff, w in terms:
            for w2, c2 in self.normal_word(w).items():
                v = result.get(w2)
                v = coeff * c2 if v is None else v + coeff * c2
                if v.is_zero():
                    result.pop(w2, None)
                else:
                    result[w2] = v
        self.cache[word] = result
        return result

    def normal_form(self, terms):
        """Normal form of a word -> coeff dict."""
        result = {}
        for word, coeff in terms.items():
            if coeff.is_zero():
                continue
            for w, c in self.normal_word(word).items():
                v = result.get(w)
                v = coeff * c if v is None else v + coeff * c
                if v.is_zero():
                    result.pop(w, None)
                else:
                    result[w] = v
        return result


PLAIN = Rewriter(1)
STARRED = Rewriter(-1)


class AlgebraElem:
    """An element of the quantum matrix algebra in normal-form coordinates."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, rewriter=PLAIN, normalized=False):
        terms = terms or {}
        if not normalized:
            terms = rewriter.normal_form(terms)
        self.terms = terms

    @staticmethod
    def zero():
        return AlgebraElem({}, normalized=True)

    @staticmethod
    def one():
        return AlgebraElem({(): ONE}, normalized=True)

    @staticmethod
    def generator(i, j):
        return AlgebraElem({((i, j),): ONE}, normalized=True)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        t = dict(self.terms)
        for w, c in other.terms.items():
            v = t.get(w)
            v = c if v is None else v + c
            if v.is_zero():
                t.pop(w, None)
            else:
                t[w] = v
        return AlgebraElem(t, normalized=True)

    def __neg__(self):
        return AlgebraElem({w: -c for w, c in self.terms.items()},
                           normalized=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        if isinstance(coeff, int):
            coeff = LaurentPoly.from_int(coeff)
        if coeff.is_zero():
            return AlgebraElem.zero()
        return AlgebraElem({w: coeff * c for w, c in self.terms.items()},
                           normalized=True)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self):
        """Degree if homogeneous, else raise."""
        degs = {len(w) for w in self.terms}
        if len(degs) > 1:
            raise ValueError("inhomogeneous element")
        return degs.pop() if degs else 0

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms):
            mono = "*".join(f"x{i}{j}" for i, j in w) or "1"
            bits.append(f"({self.terms[w]!r})*{mono}")
        return " + ".join(bits)

    def to_json(self):
        return [{"word": [list(letter) for letter in w],
                 "coeff": c.to_json()}
                for w, c in sorted(self.terms.items())]

    @staticmethod
    def from_json(obj, rewriter=PLAIN):
        terms = {tuple(tuple(x) for x in item["word"]):
                 LaurentPoly.from_json(item["coeff"]) for item in obj}
        return AlgebraElem(terms, rewriter=rewriter)


def multiply(a, b, rewriter=PLAIN):
    """Product in the algebra (concatenate words, then normalize)."""
    t = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            w = w1 + w2
            c = c1 * c2
            v = t.get(w)
            v = c if v is None else v + c
            if v.is_zero():
                t.pop(w, None)
            else:
                t[w] = v
    return AlgebraElem(t, rewriter=rewriter)


def _sort_with_sign(seq, unit):
    """Sort an index list; return (sorted tuple, unit^inversions) or None.

    None signals a repeated index, which makes the minor vanish.
    """
    if len(set(seq)) != len(seq):
        return None
    return tuple(sorted(seq)), unit ** inversions(list(seq))


def quantum_minor_right(rows, cols, qexp=1):
    """The right quantum minor with the given row and column indices.

    For increasing indices this is sum_w (-q)^{l(w)} x_{i_w(1) j_1} ...;
    a row swap contributes -q^-1 and a column swap -q (with q -> q^-1 when
    qexp = -1).  Repeated indices give zero.
    """
    if len(rows) != len(cols):
        raise ValueError("row and column lists must have equal length")
    rewriter = PLAIN if qexp == 1 else STARRED
    sr = _sort_with_sign(rows, LaurentPoly.q(-qexp, -1))
    sc = _sort_with_sign(cols, LaurentPoly.q(qexp, -1))
    if sr is None or sc is None:
        return AlgebraElem.zero()
    rows, sign_r = sr
    cols, sign_c = sc
    k = len(rows)
    sign = sign_r * sign_c
    terms = {}
    for w in itertools.permutations(range(k)):
        coeff = sign * LaurentPoly.q(qexp * inversions(list(w)),
                                     -1 if inversions(list(w)) % 2 else 1)
        word = tuple((rows[w[t]], cols[t]) for t in range(k))
        terms[word] = terms.get(word, LaurentPoly.zero()) + coeff
    return AlgebraElem(terms, rewriter=rewriter)


def quantum_minor_left(rows, cols, qexp=1):
    """The left quantum minor: sum_w (-q)^{l(w)} x_{i_1 j_w(1)} ...

    Sign rules are mirrored: a row swap contributes -q, a column swap -q^-1.
    """
    if len(rows) != len(cols):
        raise ValueError("row and column lists must have equal length")
    rewriter = PLAIN if qexp == 1 else STARRED
    sr = _sort_with_sign(rows, LaurentPoly.q(qexp, -1))
    sc = _sort_with_sign(cols, LaurentPoly.q(-qexp, -1))
    if sr is None or sc is None:
        return AlgebraElem.zero()
    rows, sign_r = sr
    cols, sign_c = sc
    k = len(rows)
    sign = sign_r * sign_c
    terms = {}
    for w in itertools.permutations(range(k)):
        coeff = sign * LaurentPoly.q(qexp * inversions(list(w)),
                                     -1 if inversions(list(w)) % 2 else 1)
        word = tuple((rows[t], cols[w[t]]) for t in range(k))
        terms[word] = terms.get(word, LaurentPoly.zero()) + coeff
    return AlgebraElem(terms, rewriter=rewriter)


def quantum_det(n):
    """The quantum determinant (1..n | 1..n); central."""
    idx = list(range(1, n + 1))
    return quantum_minor_right(idx, idx)


def bideterminant(t, t2, qexp=1):
    """Product of right row minors, taken in reversed row order.

    The twisted (qexp = -1) variant multiplies in forward row order, which
    is the convention for the starred half of the mixed algebra.
    """
    if t.shape != t2.shape:
        raise ValueError("bitableau halves must have equal shape")
    rewriter = PLAIN if qexp == 1 else STARRED
    result = AlgebraElem.one()
    rows = list(zip(t.rows, t2.rows))
    if qexp == 1:
        rows.reverse()
    for row, row2 in rows:
        result = multiply(result, quantum_minor_right(list(row), list(row2),
                                                      qexp=qexp),
                          rewriter=rewriter)
    return result


def laplace_expand(rows, cols, l, form):
    """Signed shuffle expansion of a minor split at position l.

    form 1 splits the rows and shuffles the columns (left minors); form 2
    splits the columns and shuffles the rows (right minors).  Returns a
    list of (coeff, (rows1, cols1), (rows2, cols2)).
    """
    k = len(rows)
    if len(cols) != k or not 0 < l < k + 1:
        raise ValueError("bad split")
    shuffled = cols if form == 1 else rows
    fixed = rows if form == 1 else cols
    if list(shuffled) != sorted(shuffled):
        raise ValueError("shuffled index list must be strictly increasing")
    out = []
    for pick in itertools.combinations(range(k), l):
        rest = [t for t in range(k) if t not in pick]
        order = list(pick) + rest
        coeff = neg_q_power(inversions(order))
        first = [shuffled[t] for t in pick]
        second = [shuffled[t] for t in rest]
        if form == 1:
            out.append((coeff, (list(fixed[:l]), first),
                        (list(fixed[l:]), second)))
        else:
            out.append((coeff, (first, list(fixed[:l])),
                        (second, list(fixed[l:]))))
    return out


def monomial_basis(n, m):
    """All normal words of degree m: multisets of letters, sorted."""
    letters = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return list(itertools.combinations_with_replacement(letters, m))


def word_content(word, n):
    """(row content, column content) of a word."""
    a = [0] * n
    b = [0] * n
    for i, j in word:
        a[i - 1] += 1
        b[j - 1] += 1
    return tuple(a), tuple(b)


def standard_bitableaux(n, m):
    """All pairs of standard tableaux of a common shape of size m."""
    out = []
    for lam in partitions(m, n):
        tabs = enumerate_standard(lam, n)
        for t in tabs:
            for t2 in tabs:
                out.append((t, t2))
    return out


class _StraightenCache:
    """Per-(n, content-pair) membership solvers for the standard basis."""

    def __init__(self):
        self.solvers = {}

    def solver(self, n, alpha, beta):
        key = (n, alpha, beta)
        hit = self.solvers.get(key)
        if hit is not None:
            return hit
        m = sum(alpha)
        index = []
        solver = SpanSolver()
        for lam in partitions(m, n):
            tabs = enumerate_standard(lam, n)
            lefts = [t for t in tabs if content(t, n) == alpha]
            rights = [t for t in tabs if content(t, n) == beta]
            for t in lefts:
                for t2 in rights:
                    bd = bideterminant(t, t2)
                    row = {w: RationalFn(c) for w, c in bd.terms.items()}
                    if solver.insert(row):
                        index.append((t, t2))
                    else:
                        raise AssertionError(
                            "standard bideterminants must be independent")
        result = (index, solver)
        self.solvers[key] = result
        return result


_STRAIGHTEN = _StraightenCache()


def straighten(a, n):
    """Expand a homogeneous element over the standard bideterminant basis.

    Returns a dict (t, t2) -> RationalFn.  The expansion exists and is
    unique; failure to solve signals a bug.
    """
    a.degree()  # raises on inhomogeneous input
    blocks = {}
    for w, c in a.terms.items():
        blocks.setdefault(word_content(w, n), {})[w] = RationalFn(c)
    out = {}
    for (alpha, beta), vec in blocks.items():
        index, solver = _STRAIGHTEN.solver(n, alpha, beta)
        combo = solver.solve(vec)
        if combo is None:
            raise AssertionError("element outside the standard-basis span")
        for pos, coeff in combo.items():
            if not coeff.is_zero():
                key = index[pos]
                out[key] = out.get(key, RationalFn.zero()) + coeff
    return {k: v for k, v in out.items() if not v.is_zero()}
