"""Exact arithmetic in Z[q, q^-1]: Laurent polynomials, quantum integers.

Every coefficient in this package lives in the ring Z[q, q^-1] or in its
fraction field (see :mod:`qschur.linalg`).  Laurent polynomials are kept in
canonical sparse form: a dict from integer exponent to nonzero integer
coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class LaurentPoly:
    """A Laurent polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms:
            self.terms = {e: c for e, c in terms.items() if c}
        else:
            self.terms = {}
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def one():
        return LaurentPoly({0: 1})

    @staticmethod
    def from_int(c):
        return LaurentPoly({0: c})

    @staticmethod
    def q(exp=1, coeff=1):
        """The monomial coeff * q^exp."""
        return LaurentPoly({exp: coeff})

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {0: 1}

    def is_monomial(self):
        return len(self.terms) == 1

    def is_unit(self):
        """True iff this is +-q^k, a unit of Z[q,q^-1]."""
        if len(self.terms) != 1:
            return False
        ((_, c),) = self.terms.items()
        return c in (1, -1)

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = t
        r._hash = None
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = {e: -c for e, c in self.terms.items()}
        r._hash = None
        return r

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            r = LaurentPoly.__new__(LaurentPoly)
            r.terms = {e: c * other for e, c in self.terms.items()}
            r._hash = None
            return r
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                v = t.get(e, 0) + c1 * c2
                if v:
                    t[e] = v
                else:
                    del t[e]
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = t
        r._hash = None
        return r

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            ((e, c),) = self.terms.items()
            return LaurentPoly({e * n: (-1) ** n if c == -1 else 1})
        r = LaurentPoly.one()
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # -- comparison ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            return self.terms == {0: other}
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- inspection ----------------------------------------------------

    def min_exp(self):
        return min(self.terms) if self.terms else 0

    def max_exp(self):
        return max(self.terms) if self.terms else 0

    def num_terms(self):
        return len(self.terms)

    def content(self):
        """The gcd of the integer coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, abs(c))
        return g

    def shift(self, k):
        """Multiply by q^k."""
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = {e + k: c for e, c in self.terms.items()}
        r._hash = None
        return r

    def int_div(self, g):
        """Divide every coefficient by the integer g (must be exact)."""
        t = {}
        for e, c in self.terms.items():
            d, m = divmod(c, g)
            if m:
                raise ValueError("inexact integer division")
            t[e] = d
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = t
        r._hash = None
        return r

    def unit_decompose(self):
        """For a unit +-q^k, return (sign, k)."""
        ((e, c),) = self.terms.items()
        if c not in (1, -1):
            raise ValueError("not a unit of Z[q,q^-1]")
        return c, e

    # -- evaluation ----------------------------------------------------

    def subs(self, value):
        """Evaluate at a nonzero rational value of q."""
        value = Fraction(value)
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * value ** e
        return total

    def eval_mod(self, q0, p):
        """Evaluate at q = q0 modulo the prime p (q0 invertible mod p)."""
        q0inv = pow(q0, -1, p)
        total = 0
        for e, c in self.terms.items():
            base = q0 if e >= 0 else q0inv
            total = (total + c * pow(base, abs(e), p)) % p
        return total

    # -- display / serialization ----------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                bits.append(f"{c:+d}")
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                sgn = "+" if c > 0 else "-"
                pw = "q" if e == 1 else f"q^{e}"
                bits.append(f"{sgn}{mag}{pw}")
        s = "".join(bits)
        return s[1:] if s.startswith("+") else s

    def to_json(self):
        return {str(e): str(c) for e, c in sorted(self.terms.items())}

    @staticmethod
    def from_json(obj):
        return LaurentPoly({int(e): int(c) for e, c in obj.items()})


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
Q = LaurentPoly.q(1)
QINV = LaurentPoly.q(-1)
MINUS_Q = LaurentPoly.q(1, -1)


def neg_q_power(k):
    """(-q)^k for any integer k."""
    return LaurentPoly({k: 1 if k % 2 == 0 else -1})


def laurent_divmod(a, b):
    """Exact-oriented division in Z[q,q^-1]: a = quo*b + rem.

    Works over Q internally; raises if the quotient has non-integer
    coefficients (callers only divide when exactness is guaranteed).
    """
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero(), LaurentPoly.zero()
    # shift both to ordinary polynomials in q
    sa, sb = a.min_exp(), b.min_exp()
    da = {e - sa: Fraction(c) for e, c in a.terms.items()}
    db = {e - sb: Fraction(c) for e, c in b.terms.items()}
    deg_b = max(db)
    lead_b = db[deg_b]
    quo = {}
    rem = dict(da)
    while rem and max(rem) >= deg_b:
        deg_r = max(rem)
        f = rem[deg_r] / lead_b
        quo[deg_r - deg_b] = f
        for e, c in db.items():
            k = e + deg_r - deg_b
            v = rem.get(k, 0) - f * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    qshift = sa - sb
    for e, c in quo.items():
        if c.denominator != 1:
            raise ValueError("quotient not in Z[q,q^-1]")
    for e, c in rem.items():
        if c.denominator != 1:
            raise ValueError("remainder not in Z[q,q^-1]")
    qp = LaurentPoly({e + qshift: int(c) for e, c in quo.items() if c})
    rp = LaurentPoly({e + sa: int(c) for e, c in rem.items() if c})
    return qp, rp


def divides(b, a):
    """True iff b divides a exactly in Z[q,q^-1]."""
    try:
        _, rem = laurent_divmod(a, b)
    except ValueError:
        return False
    return rem.is_zero()


def exact_div(a, b):
    quo, rem = laurent_divmod(a, b)
    if not rem.is_zero():
        raise ValueError("inexact division")
    return quo


def quantum_integer(l):
    """The balanced quantum integer [l]_q = sum_{i=0}^{l-1} q^(2i-l+1)."""
    if l < 0:
        raise ValueError("quantum_integer needs l >= 0")
    return LaurentPoly({2 * i - l + 1: 1 for i in range(l)})


def quantum_integer_signed(x):
    """[x]_q extended to negative x by [-x]_q = -[x]_q."""
    if x >= 0:
        return quantum_integer(x)
    return -quantum_integer(-x)


def quantum_factorial(l):
    r = LaurentPoly.one()
    for i in range(1, l + 1):
        r = r * quantum_integer(i)
    return r


def quantum_binomial(top, t):
    """Balanced Gaussian binomial: prod_{s=1}^t [top-s+1]_q / [s]_q.

    top may be any integer; the result is always in Z[q,q^-1].
    """
    if t < 0:
        raise ValueError("quantum_binomial needs t >= 0")
    num = LaurentPoly.one()
    for s in range(1, t + 1):
        num = num * quantum_integer_signed(top - s + 1)
        if num.is_zero():
            return num
    return exact_div(num, quantum_factorial(t))
