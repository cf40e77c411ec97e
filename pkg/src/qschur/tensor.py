"""Matrix representations on ordinary and mixed tensor space.

Basis vectors are indexed by multi-index tuples over 1..n; a mixed space
with r plain and s dual factors uses concatenated tuples of length r+s
(the first r entries index plain factors, the rest dual factors).

An Endo stores a linear map as a sparse dict (source key, target key) ->
coefficient, so phi(v_src) = sum entries[(src, tgt)] v_tgt.  Operator
actions follow the source text of the constructions: the braid-type
generators act on the right, the quantum-group generators on the left;
commutation of the two actions is a statement about the matrices and does
not depend on the side convention.

Quantum-group actions are built recursively from the coproduct on the
closed operator families K^a e^(k) and f^(k) K^a, with the dual-factor
action derived mechanically from the antipode.
"""

from __future__ import annotations

import itertools
import time

from .laurent import (LaurentPoly, ONE, neg_q_power, quantum_binomial,
                      quantum_integer)
from .linalg import Echelon, RationalFn, SpanSolver
from .tableaux import Perm, multi_indices, weight


class Endo:
    """A sparse linear map between tensor-space bases."""

    __slots__ = ("entries",)

    def __init__(self, entries=None):
        self.entries = {k: v for k, v in (entries or {}).items()
                        if not v.is_zero()}

    @staticmethod
    def identity(keys):
        return Endo({(k, k): ONE for k in keys})

    def is_zero(self):
        return not self.entries

    def __add__(self, other):
        t = dict(self.entries)
        for k, v in other.entries.items():
            u = t.get(k)
            u = v if u is None else u + v
            if u.is_zero():
                t.pop(k, None)
            else:
                t[k] = u
        r = Endo.__new__(Endo)
        r.entries = t
        return r

    def __neg__(self):
        r = Endo.__new__(Endo)
        r.entries = {k: -v for k, v in self.entries.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        if isinstance(coeff, int):
            coeff = LaurentPoly.from_int(coeff)
        if coeff.is_zero():
            return Endo({})
        r = Endo.__new__(Endo)
        r.entries = {k: coeff * v for k, v in self.entries.items()}
        return r

    def then(self, other):
        """The composite map: apply self first, then other."""
        by_src = {}
        for (src, tgt), v in other.entries.items():
            by_src.setdefault(src, []).append((tgt, v))
        t = {}
        for (src, mid), v in self.entries.items():
            for tgt, w in by_src.get(mid, ()):
                key = (src, tgt)
                u = t.get(key)
                c = v * w
                u = c if u is None else u + c
                if u.is_zero():
                    t.pop(key, None)
                else:
                    t[key] = u
        r = Endo.__new__(Endo)
        r.entries = t
        return r

    def commutator(self, other):
        return self.then(other) - other.then(self)

    def commutes_with(self, other):
        return self.commutator(other).is_zero()

    def __eq__(self, other):
        if not isinstance(other, Endo):
            return NotImplemented
        return self.entries == other.entries

    def row(self, src):
        return {tgt: v for (s, tgt), v in self.entries.items() if s == src}

    def modular(self, index, q0, p):
        """Dense row-major matrix of residues at q = q0 modulo p."""
        import numpy
        d = len(index)
        m = numpy.zeros((d, d), dtype=numpy.int64)
        for (src, tgt), v in self.entries.items():
            m[index[src], index[tgt]] = v.eval_mod(q0, p)
        return m


# -- bases ----------------------------------------------------------------

def ordinary_basis(n, m):
    return multi_indices(n, m)


def mixed_basis(n, r, s):
    """Concatenated (plain, dual) index tuples, plain block first."""
    return [i + j for i in multi_indices(n, r) for j in multi_indices(n, s)]


# -- braid-type generators --------------------------------------------------

def _swap_action(entries, keys, pos, dual):
    """Fill the three-case action at tensor positions pos, pos+1."""
    for key in keys:
        a, b = key[pos], key[pos + 1]
        if a == b:
            entries[(key, key)] = LaurentPoly.q(-1)
            continue
        swapped = key[:pos] + (b, a) + key[pos + 2:]
        increasing = a < b
        if dual:
            increasing = not increasing
        if increasing:
            entries[(key, swapped)] = ONE
        else:
            entries[(key, swapped)] = ONE
            entries[(key, key)] = LaurentPoly.q(-1) - LaurentPoly.q(1)
    return entries


def hecke_generator(n, m, i):
    """The generator S_i acting on positions i, i+1 of the plain space."""
    if not 1 <= i <= m - 1:
        raise ValueError("generator index out of range")
    return Endo(_swap_action({}, ordinary_basis(n, m), i - 1, dual=False))


def hecke_word(n, m, w):
    """The product of generators along a reduced word of w."""
    result = Endo.identity(ordinary_basis(n, m))
    for i in w.reduced_word():
        result = result.then(hecke_generator(n, m, i))
    return result


def walled_generators(n, r, s):
    """(E, [S_1..S_{r-1}], [Shat_1..Shat_{s-1}]) on the mixed space."""
    keys = mixed_basis(n, r, s)
    S = [Endo(_swap_action({}, keys, i - 1, dual=False))
         for i in range(1, r)]
    Shat = [Endo(_swap_action({}, keys, r + j - 1, dual=True))
            for j in range(1, s)]
    E = None
    if r >= 1 and s >= 1:
        entries = {}
        for key in keys:
            a, b = key[r - 1], key[r]
            if a != b:
                continue
            coeff = LaurentPoly.q(2 * a - n - 1)
            for t in range(1, n + 1):
                tgt = key[:r - 1] + (t, t) + key[r + 1:]
                entries[(key, tgt)] = coeff
        E = Endo(entries)
    return E, S, Shat


# -- quantum-group generators ------------------------------------------------

def _e_single(n, kind, i, a, k):
    """K_i^a e_i^(k) on one factor ('v' plain, 'd' dual), as an entry dict."""
    if k == 0:
        sign = 1 if kind == "v" else -1
        return {(j, j): LaurentPoly.q(
            sign * a * ((j == i) - (j == i + 1)))
            for j in range(1, n + 1)}
    if k == 1:
        if kind == "v":
            return {(i + 1, i): LaurentPoly.q(a)}
        return {(i, i + 1): LaurentPoly.q(a - 1, -1)}
    return {}


def _f_single(n, kind, i, a, k):
    """f_i^(k) K_i^a on one factor."""
    if k == 0:
        sign = 1 if kind == "v" else -1
        return {(j, j): LaurentPoly.q(
            sign * a * ((j == i) - (j == i + 1)))
            for j in range(1, n + 1)}
    if k == 1:
        if kind == "v":
            return {(i, i + 1): LaurentPoly.q(a)}
        return {(i + 1, i): LaurentPoly.q(a + 1, -1)}
    return {}


def _tensor_combine(first, rest):
    """Tensor product of entry dicts over the first factor and the rest."""
    out = {}
    for (s1, t1), c1 in first.items():
        for (s2, t2), c2 in rest.items():
            out[((s1,) + s2, (t1,) + t2)] = c1 * c2
    return out


def _family_matrix(n, kinds, i, a, k, single, qsign, cache):
    """Matrix of the family operator on a tensor of the given factor kinds.

    single builds the one-factor matrix; qsign = +1 for the K^a e^(k)
    family (coproduct weights q^(j(k-j)), second leg K^(a+j-k) e^(j)) and
    -1 for the f^(k) K^a family (weights q^(-j(k-j)), first leg
    f^(k-j) K^(j+a)).
    """
    key = (n, kinds, i, a, k)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not kinds:
        result = {((), ()): ONE} if k == 0 else {}
        cache[key] = result
        return result
    out = {}
    for j in range(k + 1):
        if qsign > 0:
            head = single(n, kinds[0], i, a, k - j)
            tail = _family_matrix(n, kinds[1:], i, a + j - k, j,
                                  single, qsign, cache)
        else:
            head = single(n, kinds[0], i, j + a, k - j)
            tail = _family_matrix(n, kinds[1:], i, a, j,
                                  single, qsign, cache)
        if not head or not tail:
            continue
        coeff = LaurentPoly.q(qsign * j * (k - j))
        for kk, v in _tensor_combine(head, tail).items():
            u = out.get(kk)
            u = coeff * v if u is None else u + coeff * v
            if u.is_zero():
                out.pop(kk, None)
            else:
                out[kk] = u
    cache[key] = out
    return out


_E_CACHE = {}
_F_CACHE = {}


def ugen_on_kinds(n, kinds, g):
    """The action of a quantum-group generator on the given factor kinds.

    g is ('e', i, l) or ('f', i, l) for divided powers, or ('qh', h) with
    h an integer vector of length n (so ('qh', h) acts on a plain factor
    of index j by q^(h_j) and on a dual factor by q^(-h_j)).
    """
    tag = g[0]
    if tag == "e":
        _, i, l = g
        return Endo(_family_matrix(n, tuple(kinds), i, 0, l,
                                   _e_single, 1, _E_CACHE))
    if tag == "f":
        _, i, l = g
        return Endo(_family_matrix(n, tuple(kinds), i, 0, l,
                                   _f_single, -1, _F_CACHE))
    if tag == "qh":
        _, h = g
        entries = {}
        for key in itertools.product(range(1, n + 1), repeat=len(kinds)):
            exp = 0
            for kind, j in zip(kinds, key):
                exp += h[j - 1] if kind == "v" else -h[j - 1]
            entries[(key, key)] = LaurentPoly.q(exp)
        return Endo(entries)
    raise ValueError(f"unknown generator tag {tag!r}")


def ugen_ordinary(n, m, g):
    return ugen_on_kinds(n, ("v",) * m, g)


def ugen_mixed(n, r, s, g):
    return ugen_on_kinds(n, ("v",) * r + ("d",) * s, g)


def k_vector(n, i, power=1):
    """The exponent vector of K_i^power."""
    h = [0] * n
    h[i - 1] = power
    h[i] = -power
    return tuple(h)


def uprime_generators(n, max_power):
    """Divided powers up to max_power and K_i^(+-1), for i = 1..n-1."""
    gens = []
    for i in range(1, n):
        for l in range(1, max_power + 1):
            gens.append(("e", i, l))
            gens.append(("f", i, l))
        gens.append(("qh", k_vector(n, i, 1)))
        gens.append(("qh", k_vector(n, i, -1)))
    return gens


# -- the embedding kappa ------------------------------------------------------

def kappa(n):
    """v*_i -> (-q)^i sum_w (-q)^(l(w)) v_((1..i^..n).w), as an entry dict."""
    if n < 2:
        raise ValueError("kappa needs n >= 2")
    out = {}
    for i in range(1, n + 1):
        base = tuple(t for t in range(1, n + 1) if t != i)
        row = {}
        for w in itertools.permutations(range(n - 1)):
            img = tuple(base[w[t]] for t in range(n - 1))
            inv = sum(1 for a in range(n - 1) for b in range(a + 1, n - 1)
                      if w[a] > w[b])
            row[img] = neg_q_power(i + inv)
        out[i] = row
    return out


def kappa_mixed(n, r, s):
    """The embedding of the mixed space into the plain space of degree
    r + (n-1)s, as an Endo-style dict from mixed keys to plain keys."""
    kap = kappa(n) if s else {}
    entries = {}
    for key in mixed_basis(n, r, s):
        plain, dual = key[:r], key[r:]
        images = [(plain, ONE)]
        for j in dual:
            images = [(pref + img, c * v)
                      for pref, c in images
                      for img, v in kap[j].items()]
        for tgt, c in images:
            entries[(key, tgt)] = c
    return Endo(entries)


# -- weight projectors -------------------------------------------------------

def weight_le(lam, mu):
    """lam precedes mu: lexicographic order on difference vectors."""
    dl = tuple(lam[i] - lam[i + 1] for i in range(len(lam) - 1))
    dm = tuple(mu[i] - mu[i + 1] for i in range(len(mu) - 1))
    return dl <= dm


def weight_projector(n, m, lam):
    """Diagonal operator: 1 on weight lam, 0 on strictly smaller weights."""
    if len(lam) != n or sum(lam) != m or any(x < 0 for x in lam):
        raise ValueError("lam must be a composition of m into n parts")
    entries = {}
    for key in ordinary_basis(n, m):
        wt = weight(key, n)
        scalar = ONE
        for i in range(n - 1):
            a = wt[i] - wt[i + 1]
            t = lam[i] - lam[i + 1] + m + 1
            scalar = scalar * quantum_binomial(a + m + 1, t)
            if scalar.is_zero():
                break
        if not scalar.is_zero():
            entries[(key, key)] = scalar
    return Endo(entries)


# -- commutant and image-algebra dimensions -----------------------------------

def _block_of(key, block_key):
    return block_key(key) if block_key else None


def _commutant_rows(gens, src_keys, tgt_keys):
    """Equation rows of X g = g X for an unknown X: src block -> tgt block.

    The entry of X then g at (a, c) is sum_b X[a,b] g[b,c]; of g then X it
    is sum_t g[a,t] X[t,c].  One row per (generator, a, c), as a dict from
    unknown position (row key, column key of X) to LaurentPoly.
    """
    src_set, tgt_set = set(src_keys), set(tgt_keys)
    for g in gens:
        rows = {}
        for (b, c), v in g.entries.items():
            if b in tgt_set and c in tgt_set:
                for a in src_keys:
                    row = rows.setdefault((a, c), {})
                    row[(a, b)] = row.get((a, b), LaurentPoly.zero()) + v
        for (a, t), v in g.entries.items():
            if a in src_set and t in src_set:
                for c in tgt_keys:
                    row = rows.setdefault((a, c), {})
                    row[(t, c)] = row.get((t, c), LaurentPoly.zero()) - v
        for row in rows.values():
            row = {k: v for k, v in row.items() if not v.is_zero()}
            if row:
                yield row


def commutant_dim(gens, keys, block_key=None, want_basis=False):
    """Dimension of the joint commutant of gens on the given basis.

    If block_key is given, every generator must preserve each block; the
    unknown operator then decomposes into independent maps between ordered
    block pairs, which are solved separately.
    """
    keys = list(keys)
    if block_key:
        for g in gens:
            for (src, tgt) in g.entries:
                if block_key(src) != block_key(tgt):
                    raise ValueError("generators do not preserve the blocks")
        blocks = {}
        for k in keys:
            blocks.setdefault(block_key(k), []).append(k)
        groups = [(a, b) for a in blocks.values() for b in blocks.values()]
    else:
        groups = [(keys, keys)]
    total = 0
    basis = []
    for src_keys, tgt_keys in groups:
        nunk = len(src_keys) * len(tgt_keys)
        if want_basis:
            from .linalg import SparseMat, mat_nullspace
            unknowns = [(a, b) for a in src_keys for b in tgt_keys]
            pos = {u: t for t, u in enumerate(unknowns)}
            entries = {}
            nrows = 0
            for row in _commutant_rows(gens, src_keys, tgt_keys):
                for u, v in row.items():
                    entries[(nrows, pos[u])] = v
                nrows += 1
            vecs = mat_nullspace(SparseMat(nrows, len(unknowns), entries))
            total += len(vecs)
            for vec in vecs:
                basis.append(Endo(_cleared(dict(zip(unknowns, vec)))))
        else:
            ech = Echelon()
            for row in _commutant_rows(gens, src_keys, tgt_keys):
                ech.insert(row)
            total += nunk - ech.rank
    if want_basis:
        return total, basis
    return total


def _cleared(frac_dict):
    """Scale a RationalFn dict by a common denominator; LaurentPoly values."""
    from .laurent import exact_div
    den = LaurentPoly.one()
    for v in frac_dict.values():
        if not v.is_zero() and not v.den.is_one():
            den = den * v.den
    return {k: v.num * exact_div(den, v.den)
            for k, v in frac_dict.items() if not v.is_zero()}


def image_algebra_dim(gens, keys, max_rounds=None):
    """Dimension of the unital algebra generated by gens (exact closure)."""
    keys = list(keys)
    ident = Endo.identity(keys)
    ech = Echelon()
    queue = []
    for mat in [ident] + list(gens):
        if ech.insert(dict(mat.entries)):
            queue.append(mat)
    bound = max_rounds if max_rounds is not None else len(keys) ** 2
    head = 0
    rounds = 0
    while head < len(queue):
        mat = queue[head]
        head += 1
        for g in gens:
            prod = mat.then(g)
            if prod.entries and ech.insert(dict(prod.entries)):
                queue.append(prod)
        rounds += 1
        if rounds > bound:
            raise AssertionError("span closure failed to stabilize")
    return ech.rank


def image_algebra_dim_modular(gens, keys, q0=3, p=67108859):
    """Lower bound for image_algebra_dim: the same closure at q = q0 mod p.

    Specializing q can only drop the dimension, so the result is a certified
    lower bound for the exact dimension.
    """
    import numpy
    keys = list(keys)
    index = {k: t for t, k in enumerate(keys)}
    d = len(keys)
    mats = [g.modular(index, q0, p) for g in gens]
    pivots = {}

    def reduce_insert(flat):
        # reduce the leading entry until it hits a fresh pivot column
        flat = flat % p
        while True:
            nz = numpy.nonzero(flat)[0]
            if nz.size == 0:
                return False
            col = int(nz[0])
            hit = pivots.get(col)
            if hit is None:
                inv = pow(int(flat[col]), -1, p)
                pivots[col] = (flat, inv)
                return True
            rowvec, inv = hit
            flat = (flat - int(flat[col]) * inv % p * rowvec) % p

    queue = [numpy.eye(d, dtype=numpy.int64)]
    for m in mats:
        queue.append(m % p)
    kept = []
    for m in queue:
        if reduce_insert(m.reshape(-1).copy()):
            kept.append(m)
    head = 0
    while head < len(kept):
        m = kept[head]
        head += 1
        for g in mats:
            prod = _matmul_mod(m, g, p)
            if reduce_insert(prod.reshape(-1).copy()):
                kept.append(prod)
    return len(pivots)


def _matmul_mod(a, b, p):
    # entries < p < 2^26, products < 2^52: exact in int64 after per-row mod
    import numpy
    d = a.shape[0]
    out = numpy.zeros_like(a)
    for t in range(d):
        out[t] = (a[t][:, None] % p * (b % p)).sum(axis=0) % p
    return out


def certified_image_dim(gens, keys, commutant_gens, block_key=None,
                        q0=3, p=67108859):
    """Exact dimension of the unital algebra generated by gens.

    Certified squeeze: every generator is checked (exactly) to commute with
    commutant_gens, so the image algebra sits inside their commutant and the
    commutant dimension is an upper bound; the modular closure is a lower
    bound.  When the two meet, that value is the exact dimension.  Otherwise
    the slow exact closure decides.
    """
    for g in gens:
        for w in commutant_gens:
            if not g.commutes_with(w):
                raise ValueError("generators do not commute with the "
                                 "proposed commutant generators")
    upper = commutant_dim(commutant_gens, keys, block_key=block_key)
    lower = image_algebra_dim_modular(gens, keys, q0=q0, p=p)
    if lower == upper:
        return lower
    return image_algebra_dim(gens, keys)


def ordinary_weight_block(n):
    """Block key on plain tensor space: the weight (Hecke-invariant)."""
    return lambda key: weight(key, n)


def pi_restrict(phi, n, r, s):
    """Restrict an operator on the plain space to the embedded mixed space.

    Solves phi(kappa(v_src)) = sum_tgt lam[src, tgt] kappa(v_tgt) exactly;
    raises if the image of the embedding is not preserved.
    """
    kap = kappa_mixed(n, r, s)
    keys = mixed_basis(n, r, s)
    solver = SpanSolver()
    for key in keys:
        if not solver.insert({t: RationalFn(v) for t, v in
                              kap.row(key).items()}):
            raise AssertionError("embedding rows must be independent")
    composed = kap.then(phi)
    entries = {}
    for key in keys:
        vec = {t: RationalFn(v) for t, v in composed.row(key).items()}
        combo = solver.solve(vec)
        if combo is None:
            raise ValueError("operator does not preserve the embedded image")
        for pos, coeff in combo.items():
            if coeff.is_zero():
                continue
            if not coeff.is_unit_denominator():
                raise AssertionError("restriction has non-unit denominators")
            entries[(key, keys[pos])] = coeff.num
    return Endo(entries)


# -- the end-to-end verification ----------------------------------------------

def mixed_weight_block(n, r, s):
    """Block key: the difference of plain and dual weights (walled-invariant)."""
    def block(key):
        wp = weight(key[:r], n)
        wd = weight(key[r:], n)
        return tuple(a - b for a, b in zip(wp, wd))
    return block


def verify_schur_weyl(n, r, s):
    """Compare the four dimension computations on the mixed space.

    Returns a report dict with the commutant dimension of the walled
    generators, the image dimension of the quantum-group generators, the
    count of standard rational bitableaux, and the dimension of the
    coefficient quotient; ok is True when all four agree and every
    quantum-group generator commutes with every walled generator.
    """
    from .mixed import quotient, standard_rational_bitableaux
    t0 = time.time()
    keys = mixed_basis(n, r, s)
    E, S, Shat = walled_generators(n, r, s)
    walled = ([E] if E is not None else []) + S + Shat
    ugens = [ugen_mixed(n, r, s, g) for g in uprime_generators(n, r + s)]
    commuting = all(u.commutes_with(w) for u in ugens for w in walled)
    cdim = commutant_dim(walled, keys,
                         block_key=mixed_weight_block(n, r, s))
    lower = image_algebra_dim_modular(ugens, keys)
    idim = lower if (commuting and lower == cdim) \
        else image_algebra_dim(ugens, keys)
    count = len(standard_rational_bitableaux(n, r, s))
    qdim = quotient(n, r, s).dimension()
    ok = commuting and cdim == idim == count == qdim
    return {"n": n, "r": r, "s": s,
            "commutant_dim": cdim, "image_dim": idim,
            "rational_bitableaux": count, "coeff_quotient_dim": qdim,
            "ok": ok, "elapsed_ms": int((time.time() - t0) * 1000)}
