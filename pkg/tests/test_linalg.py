"""Exact linear algebra engines, cross-checked against sympy ranks."""

import itertools

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qschur.laurent import LaurentPoly, ONE
from qschur.linalg import (Echelon, RationalFn, SparseMat, SpanSolver,
                           mat_nullspace, mat_rank, mat_solve_membership)

_q = sympy.Symbol("q")


def to_sympy(p):
    return sympy.Add(*[c * _q ** e for e, c in p.terms.items()])


laurents = st.dictionaries(st.integers(-2, 2), st.integers(-5, 5),
                           max_size=3).map(LaurentPoly)


def test_rationalfn_normalization_routes():
    q = LaurentPoly.q(1)
    a = RationalFn(q * q - ONE, q - ONE)          # folds to q + 1
    b = RationalFn(q + ONE)
    assert a == b and a.is_unit_denominator()
    c = RationalFn(ONE, LaurentPoly.q(2, -3))     # unit-content denominator
    d = RationalFn(LaurentPoly.q(-2), LaurentPoly.from_int(-3))
    assert c == d
    assert not RationalFn(ONE, q + ONE).is_unit_denominator()


def test_rationalfn_field_laws():
    q = LaurentPoly.q(1)
    a = RationalFn(ONE, q + ONE)
    b = RationalFn(q, q - ONE)
    assert (a + b) * (q + ONE) * (q - ONE) == \
        (q - ONE) + q * (q + ONE)
    assert a * a.inverse() == RationalFn.one()
    assert (a / b) * b == a


def _random_matrix(rng_rows):
    return SparseMat(len(rng_rows), len(rng_rows[0]),
                     {(r, c): v for r, row in enumerate(rng_rows)
                      for c, v in enumerate(row)})


@given(st.lists(st.lists(laurents, min_size=4, max_size=4),
                min_size=3, max_size=3))
@settings(max_examples=20, deadline=None)
def test_rank_matches_sympy(rows):
    mat = _random_matrix(rows)
    sym = sympy.Matrix([[to_sympy(v) for v in row] for row in rows])
    assert mat_rank(mat) == sym.rank()


@given(st.lists(st.lists(laurents, min_size=4, max_size=4),
                min_size=3, max_size=3))
@settings(max_examples=20, deadline=None)
def test_rank_transpose_invariant(rows):
    mat = _random_matrix(rows)
    assert mat_rank(mat) == mat_rank(mat.transpose())


def test_echelon_reduce_is_linear_and_canonical():
    ech = Echelon()
    q = LaurentPoly.q(1)
    ech.insert({0: q, 1: ONE})
    ech.insert({1: q + ONE, 2: ONE})
    v1 = {0: ONE, 2: q}
    v2 = {1: q, 2: ONE}
    r1 = ech.coords(v1)
    r2 = ech.coords(v2)
    both = ech.coords({0: ONE, 1: q, 2: q + ONE})
    keys = set(r1) | set(r2) | set(both)
    for k in keys:
        a = r1.get(k, RationalFn.zero()) + r2.get(k, RationalFn.zero())
        assert a == both.get(k, RationalFn.zero())


def test_echelon_contains_span_members():
    ech = Echelon()
    rows = [{0: ONE, 1: LaurentPoly.q(1)},
            {1: ONE, 2: LaurentPoly.q(-1)}]
    for row in rows:
        ech.insert(dict(row))
    combo = {}
    for row, c in zip(rows, (LaurentPoly.q(2), LaurentPoly.from_int(3))):
        for k, v in row.items():
            combo[k] = combo.get(k, LaurentPoly.zero()) + c * v
    assert ech.contains(combo)
    assert not ech.contains({0: ONE})


@given(st.lists(st.lists(laurents, min_size=4, max_size=4),
                min_size=3, max_size=3),
       st.lists(st.integers(-3, 3), min_size=3, max_size=3))
@settings(max_examples=20, deadline=None)
def test_membership_coefficients_reconstruct(rows, coeffs):
    mat = _random_matrix(rows)
    vec = [RationalFn.zero()] * 4
    for row, c in zip(rows, coeffs):
        for j, v in enumerate(row):
            vec[j] = vec[j] + RationalFn(v) * c
    combo = mat_solve_membership(mat, vec)
    assert combo is not None
    rebuilt = [RationalFn.zero()] * 4
    for i, c in enumerate(combo):
        for j, v in enumerate(rows[i]):
            rebuilt[j] = rebuilt[j] + c * RationalFn(v)
    assert all(a == b for a, b in zip(rebuilt, vec))


def test_membership_detects_outside_vector():
    mat = SparseMat(1, 2, {(0, 0): ONE})
    assert mat_solve_membership(mat, [RationalFn.zero(),
                                      RationalFn.one()]) is None


@given(st.lists(st.lists(laurents, min_size=4, max_size=4),
                min_size=2, max_size=3))
@settings(max_examples=20, deadline=None)
def test_nullspace_annihilates(rows):
    mat = _random_matrix(rows)
    basis = mat_nullspace(mat)
    assert len(basis) == mat.cols - mat_rank(mat)
    for vec in basis:
        for r, row in enumerate(rows):
            total = RationalFn.zero()
            for j, v in enumerate(row):
                total = total + RationalFn(v) * vec[j]
            assert total.is_zero()


def test_spansolver_skips_dependent_rows():
    solver = SpanSolver()
    assert solver.insert({0: RationalFn.one()})
    assert not solver.insert({0: RationalFn(LaurentPoly.q(3))})
    assert solver.rank == 1
    combo = solver.solve({0: RationalFn(LaurentPoly.q(1))})
    assert set(combo) == {0}
    assert combo[0] == RationalFn(LaurentPoly.q(1))
