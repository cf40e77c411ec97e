"""Sparse exact linear algebra over Z[q,q^-1] and its fraction field.

Two engines are provided:

* :class:`Echelon` -- incremental fraction-free row reduction with
  Laurent-polynomial rows, used for ranks, nullities and canonical coset
  coordinates (no polynomial division ever happens during elimination).
* :class:`SpanSolver` -- reduced row echelon form over the fraction field
  with combination tracking, used to express a vector in a given spanning
  set (membership queries with explicit coefficients).

Vectors are dicts from a sortable column key to a nonzero entry.
"""

from __future__ import annotations

from math import gcd

from .laurent import LaurentPoly, exact_div, laurent_divmod


class RationalFn:
    """A fraction num/den of Laurent polynomials, den != 0.

    Normalization: exact divisions are folded away when possible; otherwise
    the joint integer content and the q-power of the denominator are
    stripped and the sign is fixed by a positive leading denominator
    coefficient, so that equal fractions built along different routes still
    compare equal via cross multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = LaurentPoly.from_int(num)
        if den is None:
            den = LaurentPoly.one()
        elif isinstance(den, int):
            den = LaurentPoly.from_int(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = LaurentPoly.zero()
            self.den = LaurentPoly.one()
            return
        if den.is_unit():
            s, k = den.unit_decompose()
            num = num.shift(-k)
            if s < 0:
                num = -num
            den = LaurentPoly.one()
        elif not den.is_one():
            try:
                quo, rem = laurent_divmod(num, den)
            except ValueError:
                quo, rem = None, None
            if rem is not None and rem.is_zero():
                num = quo
                den = LaurentPoly.one()
        if not den.is_one():
            g = gcd(num.content(), den.content())
            if g > 1:
                num = num.int_div(g)
                den = den.int_div(g)
            k = den.min_exp()
            if k:
                den = den.shift(-k)
                num = num.shift(-k)
            if den.terms[den.max_exp()] < 0:
                num, den = -num, -den
        self.num = num
        self.den = den

    @staticmethod
    def zero():
        return RationalFn(LaurentPoly.zero())

    @staticmethod
    def one():
        return RationalFn(LaurentPoly.one())

    def is_zero(self):
        return self.num.is_zero()

    def is_unit_denominator(self):
        """True iff the fraction lies in Z[q,q^-1] (denominator folded to 1)."""
        return self.den.is_one()

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RationalFn.__new__(RationalFn)
        r.num = -self.num
        r.den = self.den
        return r

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return RationalFn(self.num * other.den, self.den * other.num)

    def inverse(self):
        return RationalFn(self.den, self.num)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def subs(self, value):
        return self.num.subs(value) / self.den.subs(value)

    def __repr__(self):
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(obj):
        return RationalFn(LaurentPoly.from_json(obj["num"]),
                          LaurentPoly.from_json(obj["den"]))


def _coerce(x):
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, LaurentPoly):
        return RationalFn(x)
    if isinstance(x, int):
        return RationalFn(LaurentPoly.from_int(x))
    return NotImplemented


def _strip_content(v):
    """Divide a Laurent row dict by its joint integer content; return (row, g)."""
    g = 0
    for p in v.values():
        g = gcd(g, p.content())
        if g == 1:
            return v, 1
    if g <= 1:
        return v, max(g, 1)
    return {c: p.int_div(g) for c, p in v.items()}, g


class Echelon:
    """Fraction-free reduced row echelon form over Z[q,q^-1].

    Rows are sparse dicts column-key -> LaurentPoly.  Maintained fully
    reduced: no row has an entry in another row's pivot column, so a single
    forward pass reduces any vector.  Reduction is linear and, once the
    echelon is frozen, canonical.
    """

    def __init__(self):
        self.pivots = {}   # pivot column -> row dict
        self._order = []   # pivot columns in insertion order

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, v, scale=None):
        """Reduce v against the echelon.

        Returns (residual, scale) with the exact residual of v modulo the
        row span equal to scale * residual; residual has Laurent entries and
        scale is a RationalFn.  v is not modified.
        """
        v = dict(v)
        if scale is None:
            scale = RationalFn.one()
        for c in self._order:
            coeff = v.get(c)
            if coeff is None or coeff.is_zero():
                v.pop(c, None)
                continue
            row = self.pivots[c]
            p = row[c]
            new = {}
            for k, val in v.items():
                new[k] = val * p
            for k, val in row.items():
                t = new.get(k, None)
                t = (t - coeff * val) if t is not None else (-coeff) * val
                if t.is_zero():
                    new.pop(k, None)
                else:
                    new[k] = t
            v = new
            scale = scale / RationalFn(p)
            if not v:
                break
        if v:
            v, g = _strip_content(v)
            if g > 1:
                scale = scale * g
        return v, scale

    def insert(self, v):
        """Add v to the span; returns True if it enlarged the span."""
        res, _ = self.reduce(v)
        if not res:
            return False
        # pivot with the fewest terms to limit expression swell
        pc = min(res, key=lambda c: (res[c].num_terms(), c))
        # back-reduce existing rows so the echelon stays fully reduced
        p = res[pc]
        for c0 in self._order:
            row = self.pivots[c0]
            coeff = row.get(pc)
            if coeff is None:
                continue
            new = {k: val * p for k, val in row.items()}
            for k, val in res.items():
                t = new.get(k)
                t = (t - coeff * val) if t is not None else (-coeff) * val
                if t.is_zero():
                    new.pop(k, None)
                else:
                    new[k] = t
            new, _ = _strip_content(new)
            self.pivots[c0] = new
        self.pivots[pc] = res
        self._order.append(pc)
        return True

    def contains(self, v):
        res, _ = self.reduce(v)
        return not res

    def coords(self, v):
        """Canonical coordinates of v modulo the row span (RationalFn dict)."""
        res, scale = self.reduce(v)
        return {c: scale * RationalFn(p) for c, p in res.items()}


class SpanSolver:
    """RREF over the fraction field with combination tracking.

    Built from an ordered list of spanning rows; solve() expresses a vector
    as a linear combination of the original rows (coefficients are unique
    when the rows are independent).
    """

    def __init__(self, rows=None):
        self.rows = []      # list of (pivot col, rowdict RationalFn, combo dict)
        self.n_inserted = 0
        for r in rows or []:
            self.insert(r)

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, v, combo):
        v = {c: _coerce(x) for c, x in v.items() if not _coerce(x).is_zero()}
        for pc, row, rcombo in self.rows:
            coeff = v.get(pc)
            if coeff is None or coeff.is_zero():
                continue
            for k, val in row.items():
                t = v.get(k, None)
                t = (t - coeff * val) if t is not None else (-coeff) * val
                if t.is_zero():
                    v.pop(k, None)
                else:
                    v[k] = t
            for k, val in rcombo.items():
                t = combo.get(k, None)
                t = (t - coeff * val) if t is not None else (-coeff) * val
                if t.is_zero():
                    combo.pop(k, None)
                else:
                    combo[k] = t
        return v, combo

    def insert(self, v):
        """Insert the next spanning row; returns True if independent."""
        idx = self.n_inserted
        self.n_inserted += 1
        combo = {idx: RationalFn.one()}
        v, combo = self._reduce(v, combo)
        if not v:
            return False
        pc = min(v)
        pval = v[pc]
        v = {k: val / pval for k, val in v.items()}
        combo = {k: val / pval for k, val in combo.items()}
        # back-substitute to keep RREF
        for i, (pc0, row0, combo0) in enumerate(self.rows):
            coeff = row0.get(pc)
            if coeff is None:
                continue
            for k, val in v.items():
                t = row0.get(k, None)
                t = (t - coeff * val) if t is not None else (-coeff) * val
                if t.is_zero():
                    row0.pop(k, None)
                else:
                    row0[k] = t
            for k, val in combo.items():
                t = combo0.get(k, None)
                t = (t - coeff * val) if t is not None else (-coeff) * val
                if t.is_zero():
                    combo0.pop(k, None)
                else:
                    combo0[k] = t
        self.rows.append((pc, v, combo))
        self.rows.sort(key=lambda t: _key_rank(t[0]))
        return True

    def solve(self, v):
        """Coefficients expressing v over the inserted rows, or None.

        The returned dict maps insertion index -> RationalFn; combo entries
        of dependent (skipped) rows never appear.
        """
        res, combo = self._reduce(dict(v), {})
        if res:
            return None
        return {k: -val for k, val in combo.items()}


def _key_rank(k):
    return k


class SparseMat:
    """A sparse matrix over the fraction field of Z[q,q^-1]."""

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        for (r, c), v in (entries or {}).items():
            v = _coerce(v)
            if not v.is_zero():
                if not (0 <= r < rows and 0 <= c < cols):
                    raise ValueError("entry out of range")
                self.entries[(r, c)] = v

    def row_dicts(self):
        out = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self):
        return SparseMat(self.cols, self.rows,
                         {(c, r): v for (r, c), v in self.entries.items()})

    def to_json(self):
        items = sorted(self.entries.items())
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[r, c, v.to_json()] for (r, c), v in items]}

    @staticmethod
    def from_json(obj):
        entries = {(r, c): RationalFn.from_json(v)
                   for r, c, v in obj["entries"]}
        return SparseMat(obj["rows"], obj["cols"], entries)


def _laurent_rows(mat):
    """Clear denominators rowwise, yielding LaurentPoly row dicts."""
    out = []
    for row in mat.row_dicts():
        den = LaurentPoly.one()
        for v in row.values():
            den = den * v.den
        out.append({c: v.num * exact_div(den, v.den) for c, v in row.items()})
    return out


def mat_rank(mat):
    """Rank over the fraction field, by fraction-free elimination."""
    ech = Echelon()
    for row in _laurent_rows(mat):
        if row:
            ech.insert(row)
    return ech.rank


def mat_solve_membership(mat, vec):
    """Express vec in the row span of mat.

    vec is a sequence of RationalFn/LaurentPoly/int of length mat.cols.
    Returns the coefficient list (length mat.rows) or None if vec is not in
    the span.
    """
    if len(vec) != mat.cols:
        raise ValueError("vector length must equal the column count")
    solver = SpanSolver(mat.row_dicts())
    v = {c: _coerce(x) for c, x in enumerate(vec) if not _coerce(x).is_zero()}
    combo = solver.solve(v)
    if combo is None:
        return None
    return [combo.get(i, RationalFn.zero()) for i in range(mat.rows)]


def mat_nullspace(mat):
    """A basis of the right nullspace over the fraction field."""
    # RREF of the rows, over the fraction field
    solver = SpanSolver(mat.row_dicts())
    pivot_cols = sorted(pc for pc, _, _ in solver.rows)
    pivot_set = set(pivot_cols)
    rowmap = {pc: row for pc, row, _ in solver.rows}
    basis = []
    for c in range(mat.cols):
        if c in pivot_set:
            continue
        vec = [RationalFn.zero()] * mat.cols
        vec[c] = RationalFn.one()
        for pc in pivot_cols:
            coeff = rowmap[pc].get(c)
            if coeff is not None:
                vec[pc] = -coeff
        basis.append(vec)
    return basis
