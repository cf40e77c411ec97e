"""Tensor-space representations: anchors, relations, dualities."""

import itertools

import pytest

from qschur.laurent import (LaurentPoly, ONE, Q, QINV, quantum_factorial,
                            quantum_integer)
from qschur.tableaux import all_perms, weight
from qschur.tensor import (Endo, certified_image_dim, commutant_dim,
                           hecke_generator, hecke_word, image_algebra_dim,
                           image_algebra_dim_modular, k_vector, kappa,
                           kappa_mixed, mixed_basis, mixed_weight_block,
                           ordinary_basis, ordinary_weight_block,
                           pi_restrict, ugen_mixed, ugen_on_kinds,
                           ugen_ordinary, uprime_generators,
                           verify_schur_weyl, walled_generators, weight_le,
                           weight_projector)


def test_hecke_relations():
    for n in (2, 3):
        for m in (2, 3):
            ident = Endo.identity(ordinary_basis(n, m))
            gens = [hecke_generator(n, m, i) for i in range(1, m)]
            for g in gens:
                assert (g + ident.scale(Q)).then(
                    g - ident.scale(QINV)).is_zero()
            for a, b in zip(gens, gens[1:]):
                assert a.then(b).then(a) == b.then(a).then(b)


def test_hecke_word_multiplicative_on_length_additive_pairs():
    from qschur.tableaux import Perm
    n, m = 2, 3
    w = Perm((3, 2, 1))
    # the longest element: any reduced word gives the same operator
    direct = hecke_word(n, m, w)
    s1 = hecke_generator(n, m, 1)
    s2 = hecke_generator(n, m, 2)
    assert direct in (s1.then(s2).then(s1), s2.then(s1).then(s2))
    assert s1.then(s2).then(s1) == s2.then(s1).then(s2)


def test_walled_E_anchor():
    E, S, Shat = walled_generators(2, 1, 1)
    assert E.row((1, 1)) == {(1, 1): QINV, (2, 2): QINV}
    assert E.row((1, 2)) == {}
    assert E.row((2, 2)) == {(1, 1): Q, (2, 2): Q}


def test_E_squared_is_quantum_n_times_E():
    for n in (2, 3, 4):
        for r, s in ((1, 1),) if n == 4 else ((1, 1), (2, 1), (1, 2)):
            E, _, _ = walled_generators(n, r, s)
            assert E.then(E) == E.scale(quantum_integer(n))


def test_single_factor_actions():
    e = ugen_on_kinds(2, ("v",), ("e", 1, 1))
    assert e.entries == {((2,), (1,)): ONE}
    f = ugen_on_kinds(2, ("v",), ("f", 1, 1))
    assert f.entries == {((1,), (2,)): ONE}
    # dual: e_1 v*_1 = -q^{-1} v*_2 ; K_1 v*_2 = q v*_2 ; f_1 v*_2 = -q v*_1
    ed = ugen_on_kinds(2, ("d",), ("e", 1, 1))
    assert ed.entries == {((1,), (2,)): LaurentPoly.q(-1, -1)}
    kd = ugen_on_kinds(2, ("d",), ("qh", k_vector(2, 1)))
    assert kd.row((2,)) == {(2,): Q} and kd.row((1,)) == {(1,): QINV}
    fd = ugen_on_kinds(2, ("d",), ("f", 1, 1))
    assert fd.entries == {((2,), (1,)): LaurentPoly.q(1, -1)}
    # divided powers beyond the nilpotency degree vanish on one factor
    assert ugen_on_kinds(2, ("v",), ("e", 1, 2)).is_zero()
    assert ugen_on_kinds(2, ("d",), ("e", 1, 2)).is_zero()


def test_divided_powers_match_scaled_products():
    for n in (2, 3):
        for kinds in (("v", "v"), ("v", "d"), ("d", "d"), ("v", "v", "v")):
            for i in range(1, n):
                for tag in ("e", "f"):
                    g1 = ugen_on_kinds(n, kinds, (tag, i, 1))
                    assert ugen_on_kinds(n, kinds, (tag, i, 2)).scale(
                        quantum_factorial(2)) == g1.then(g1)


def test_quantum_group_relations_on_tensor_space():
    for n in (2, 3):
        m = 2
        for i in range(1, n):
            K = ugen_ordinary(n, m, ("qh", k_vector(n, i)))
            Ki = ugen_ordinary(n, m, ("qh", k_vector(n, i, -1)))
            e = ugen_ordinary(n, m, ("e", i, 1))
            f = ugen_ordinary(n, m, ("f", i, 1))
            assert Ki.then(e).then(K) == e.scale(LaurentPoly.q(2))
            assert Ki.then(f).then(K) == f.scale(LaurentPoly.q(-2))
            assert (f.then(e) - e.then(f)).scale(Q - QINV) == K - Ki


def test_serre_relation_n3():
    n, m = 3, 3
    e1 = ugen_ordinary(n, m, ("e", 1, 1))
    e2 = ugen_ordinary(n, m, ("e", 2, 1))

    def prod(*ops):
        out = Endo.identity(ordinary_basis(n, m))
        for op in reversed(ops):
            out = out.then(op)
        return out

    serre = prod(e1, e1, e2) - \
        prod(e1, e2, e1).scale(quantum_integer(2)) + prod(e2, e1, e1)
    assert serre.is_zero()


def test_kappa_anchors():
    k2 = kappa(2)
    assert k2[1] == {(2,): LaurentPoly.q(1, -1)}
    assert k2[2] == {(1,): LaurentPoly.q(2)}
    k3 = kappa(3)
    assert k3[2] == {(1, 3): LaurentPoly.q(2), (3, 1): LaurentPoly.q(3, -1)}


def test_kappa_equivariance():
    for n in (2, 3):
        for r, s in ((0, 1), (1, 1), (2, 1)):
            kap = kappa_mixed(n, r, s)
            m = r + (n - 1) * s
            for g in uprime_generators(n, r + s):
                assert kap.then(ugen_ordinary(n, m, g)) == \
                    ugen_mixed(n, r, s, g).then(kap)


def test_bicommutation():
    for n in (2, 3):
        for r, s in ((1, 1), (2, 1), (1, 2)):
            E, S, Shat = walled_generators(n, r, s)
            walled = [E] + S + Shat
            for g in uprime_generators(n, r + s):
                u = ugen_mixed(n, r, s, g)
                assert all(u.commutes_with(w) for w in walled)


def test_pi_restrict_recovers_mixed_action():
    for n in (2,):
        for r, s in ((1, 1), (0, 1), (1, 0)):
            m = r + (n - 1) * s
            for g in uprime_generators(n, max(r + s, 1)):
                big = ugen_ordinary(n, m, g)
                assert pi_restrict(big, n, r, s) == ugen_mixed(n, r, s, g)


def test_pi_restrict_rejects_non_invariant_operator():
    # a raw position swap does not preserve the embedded mixed space
    # (n=3 so that the embedding is into a strictly larger space)
    n, r, s = 3, 1, 1
    m = r + (n - 1) * s  # = 3
    keys = ordinary_basis(n, m)
    swap = Endo({(k, (k[1], k[0], k[2])): ONE for k in keys})
    with pytest.raises(ValueError):
        pi_restrict(swap, n, r, s)


def test_weight_projector_property():
    for n in (2, 3):
        for m in (1, 2):
            comps = [c for c in itertools.product(range(m + 1), repeat=n)
                     if sum(c) == m]
            for lam in comps:
                u = weight_projector(n, m, lam)
                for key in ordinary_basis(n, m):
                    wt = weight(key, n)
                    c = u.entries.get((key, key), LaurentPoly.zero())
                    if wt == lam:
                        assert c == ONE
                    elif weight_le(wt, lam):
                        assert c.is_zero()


def test_commutant_trivial_cases():
    keys = [(i,) for i in range(1, 4)]
    assert commutant_dim([], keys) == 9
    assert commutant_dim([Endo.identity(keys)], keys) == 9


def test_commutant_E_anchor():
    E, _, _ = walled_generators(2, 1, 1)
    assert commutant_dim([E], mixed_basis(2, 1, 1)) == 10
    # blocking by the conserved weight difference gives the same answer
    assert commutant_dim([E], mixed_basis(2, 1, 1),
                         block_key=mixed_weight_block(2, 1, 1)) == 10


def test_commutant_basis_members_commute():
    E, _, _ = walled_generators(2, 1, 1)
    dim, basis = commutant_dim([E], mixed_basis(2, 1, 1), want_basis=True)
    assert dim == len(basis) == 10
    for b in basis:
        assert b.commutes_with(E)


def test_image_algebra_trivial_cases():
    keys = [(i,) for i in range(1, 4)]
    assert image_algebra_dim([], keys) == 1
    s1 = hecke_generator(2, 2, 1)
    assert image_algebra_dim([s1], ordinary_basis(2, 2)) == 2


def test_image_algebra_exact_matches_modular():
    n, m = 2, 2
    keys = ordinary_basis(n, m)
    gens = [ugen_ordinary(n, m, g) for g in uprime_generators(n, m)]
    exact = image_algebra_dim(gens, keys)
    assert exact == 10
    assert image_algebra_dim_modular(gens, keys) == exact


def test_certified_image_dim_ordinary():
    from math import comb
    for n, m in ((2, 2), (2, 3), (3, 2)):
        keys = ordinary_basis(n, m)
        hecke = [hecke_generator(n, m, i) for i in range(1, m)]
        gens = [ugen_ordinary(n, m, g) for g in uprime_generators(n, m)]
        dim = certified_image_dim(gens, keys, hecke,
                                  block_key=ordinary_weight_block(n))
        assert dim == comb(n * n + m - 1, m)


def test_verify_schur_weyl_anchor():
    rep = verify_schur_weyl(2, 1, 1)
    assert rep["ok"]
    assert rep["commutant_dim"] == rep["image_dim"] == \
        rep["rational_bitableaux"] == rep["coeff_quotient_dim"] == 10
