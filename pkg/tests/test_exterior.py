import random
from fractions import Fraction
from itertools import product
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tiltss.arith import multinomial, weyl_dim
from tiltss.exterior import (ExactMatrix, bareiss_rank, ext_basis, ext_dim, generator_matrix,
                             haircut_matrix, hom_dim_Q, phi_matrix, phi_trace, rank_mod_p,
                             rank_q, sigma_eval, tableau_count, tensor_oracle_xi,
                             weight_space_dim, word_matrix)
from tiltss.schur import SchurMorphism, compose, plan_matrices
from tiltss.web import chicken_foot_word, evaluate, parse
from tiltss.weights import strict_compositions


def fraction_rank(rows):
    """Plain Gaussian elimination over Q."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def fp_rank(rows, p):
    m = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] * inv % p
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def xi(a):
    return SchurMorphism.basis(a)


def objects(max_d, max_len=3):
    for d in range(1, max_d + 1):
        yield d, [c for c in strict_compositions(d) if len(c) <= max_len]


# ------------------------------------------------------------------ ranks

@settings(max_examples=80, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=6))
def test_rank_q_matches_fraction_elimination(rows):
    expected = fraction_rank(rows)
    assert rank_q(np.array(rows, dtype=np.int64)) == expected
    assert bareiss_rank(rows) == expected


def test_rank_q_wide_matrix():
    rng = random.Random(2)
    rows = [[rng.randint(-3, 3) for _ in range(40)] for _ in range(5)]
    rows.append([x + y for x, y in zip(rows[0], rows[1])])
    assert rank_q(np.array(rows, dtype=np.int64)) == fraction_rank(rows) == 5


@settings(max_examples=80, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=5, max_size=5), min_size=1, max_size=6),
       st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p_matches_naive(rows, p):
    assert rank_mod_p(np.array(rows, dtype=np.int64), p) == fp_rank(rows, p)


# ---------------------------------------------------------------- bases

def test_ext_dimensions():
    for n in range(5):
        for lam in [(1,), (2, 1), (1, 1, 1), (3,)]:
            assert len(ext_basis(lam, n)) == ext_dim(lam, n)
            expected = 1
            for a in lam:
                expected *= weyl_dim((1,) * a + (0,) * (n - a)) if a <= n else 0
            assert ext_dim(lam, n) == expected


def test_weight_space_dim():
    for mu in [(1, 1), (2, 1), (1, 2, 1), (3, 2)]:
        diag = tuple(tuple(mu[i] if i == j else 0 for j in range(len(mu))) for i in range(len(mu)))
        assert weight_space_dim(mu) == multinomial(mu)
        assert tensor_oracle_xi(diag, len(mu)).shape == (multinomial(mu),) * 2


# ----------------------------------------------------------- generators

def test_merge_matrix_n2():
    m = generator_matrix("merge", 1, 1, 2)
    cols = m.cols
    col = {c: k for k, c in enumerate(cols)}
    assert m.data[0, col[((1,), (2,))]] == 1
    assert m.data[0, col[((2,), (1,))]] == -1
    assert m.data[0, col[((1,), (1,))]] == 0
    assert m.data[0, col[((2,), (2,))]] == 0


def test_split_matrix_n2():
    m = generator_matrix("split", 1, 1, 2)
    rows = {r: k for k, r in enumerate(m.rows)}
    assert m.data[rows[((1,), (2,))], 0] == 1
    assert m.data[rows[((2,), (1,))], 0] == -1
    assert m.data[rows[((1,), (1,))], 0] == 0


def test_cross_matrix_sign():
    m = generator_matrix("cross", 1, 1, 2)
    rows = {r: k for k, r in enumerate(m.rows)}
    for k, (s, t) in enumerate(m.cols):
        assert m.data[rows[(t, s)], k] == -1
    m = generator_matrix("cross", 2, 1, 3)
    rows = {r: k for k, r in enumerate(m.rows)}
    for k, (s, t) in enumerate(m.cols):
        assert m.data[rows[(t, s)], k] == 1


def test_generator_rejects_zero():
    with pytest.raises(ValueError):
        generator_matrix("merge", 0, 1, 2)


# ------------------------------------------------------------- sigma_eval

def test_sigma_identity():
    for lam in [(1,), (2, 1), (1, 1, 1)]:
        m = sigma_eval(SchurMorphism.identity(lam), 3)
        assert np.array_equal(m.data, np.eye(ext_dim(lam, 3), dtype=np.int64))


def test_sigma_merge_split():
    f = compose(xi(((1, 1),)), xi(((1,), (1,))))
    for n in (2, 3, 4):
        m = sigma_eval(f, n)
        assert np.array_equal(m.data, 2 * np.eye(comb(n, 2), dtype=np.int64))


def test_sigma_kills_large_thickness():
    assert sigma_eval(SchurMorphism.identity((3,)), 2).shape == (0, 0)


def test_sigma_matches_word_product():
    rng = random.Random(7)
    for _ in range(40):
        obj = rng.choice([(1, 1, 1), (2, 1), (1, 2), (3,), (2, 2), (1, 3), (2, 1, 1)])
        lines = ["obj " + " ".join(map(str, obj))]
        w = parse(lines[0])
        for _ in range(rng.randint(0, 4)):
            top = w.top
            opts = [f"merge {i + 1}" for i in range(len(top) - 1)]
            opts += [f"cross {i + 1}" for i in range(len(top) - 1)]
            opts += [f"split {i + 1} {a} {t - a}" for i, t in enumerate(top) for a in range(1, t)]
            if not opts:
                break
            lines.append(rng.choice(opts))
            w = parse("\n".join(lines))
        n = rng.randint(1, 4)
        assert sigma_eval(evaluate(w), n) == word_matrix(w, n)


def test_functoriality_sweep():
    cache = {}

    def phi(a, n):
        if (a, n) not in cache:
            cache[a, n] = sigma_eval(xi(a), n)
        return cache[a, n]

    for d, objs in objects(4):
        for n in range(1, 5):
            for lam, mu, nu in product(objs, repeat=3):
                for a in plan_matrices(lam, mu):
                    for b in plan_matrices(mu, nu):
                        lhs = phi(a, n) @ phi(b, n)
                        rhs = np.zeros(lhs.shape, dtype=np.int64)
                        for c, z in compose(xi(a), xi(b)).items():
                            rhs = rhs + z * phi(c, n).data
                        assert np.array_equal(lhs.data, rhs)


def test_three_routes_to_phi_agree():
    for d, objs in objects(4):
        for lam, mu in product(objs, repeat=2):
            for a in plan_matrices(lam, mu):
                for n in (2, 3, 4):
                    ref = word_matrix(chicken_foot_word(a), n)
                    assert phi_matrix(a, n) == ref
                    assert haircut_matrix(a, n) == ref


# --------------------------------------------------------- tensor oracle

def test_tensor_oracle_identity_and_merge():
    m = tensor_oracle_xi(((2, 0), (0, 1)), 2)
    assert np.array_equal(m.data, np.eye(3, dtype=np.int64))
    m = tensor_oracle_xi(((1, 1),), 2)
    assert m.tolist() == [[1, 1]]
    with pytest.raises(ValueError):
        tensor_oracle_xi(((1,), (1,)), 1)


# ------------------------------------------------------------ hom spaces

def literal_hom_dim(mu, lam, n):
    rows = [sigma_eval(xi(a), n).data.flatten().tolist() for a in plan_matrices(lam, mu)]
    if not rows or not rows[0]:
        return 0
    return fraction_rank(rows)


def test_hom_dim_examples():
    assert hom_dim_Q((1, 1), (1, 1), 2) == 2
    assert hom_dim_Q((1, 1), (2,), 1) == 0
    assert hom_dim_Q((1, 2), (2, 1), 3) == len(plan_matrices((2, 1), (1, 2)))


def test_hom_dim_matches_full_matrix_rank():
    for d, objs in objects(4):
        for lam, mu in product(objs, repeat=2):
            for n in range(1, 4):
                assert hom_dim_Q(mu, lam, n) == literal_hom_dim(mu, lam, n)


def test_tableau_count_examples():
    assert tableau_count((1, 1), (1, 1), 1) == 1
    assert tableau_count((2, 1), (1, 2), 0) == 0
    with pytest.raises(ValueError):
        tableau_count((1,), (2,), 2)


def test_donkin_equalities():
    for d, objs in objects(5, max_len=5):
        for lam, mu in product(objs, repeat=2):
            mats = len(plan_matrices(lam, mu))
            assert tableau_count(mu, lam, d) == mats
            for n in range(1, 5):
                h = hom_dim_Q(mu, lam, n)
                assert h == tableau_count(mu, lam, n)
                if n >= d:
                    assert h == mats


# ------------------------------------------------------------------ traces

def test_phi_trace_matches_matrix_trace():
    for lam in [(1, 1), (2, 1), (1, 2), (2, 2), (1, 1, 1)]:
        for a in plan_matrices(lam, lam):
            for n in (1, 2, 3):
                assert phi_trace(a, n) == sigma_eval(xi(a), n).trace()


def test_exact_matrix_helpers():
    m = ExactMatrix([[2, 4], [1, 3]])
    assert m.trace() == 5
    assert m.mod(2).tolist() == [[0, 0], [1, 1]]
    assert m.rank_q() == 2 and m.rank_mod_p(2) == 1
    assert (3 * m + m) == ExactMatrix([[8, 16], [4, 12]])
