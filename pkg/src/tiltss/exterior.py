"""Exterior powers of the natural GL_n-module and the functor Sigma_n.

Basis of Lambda^lam V_n = Lambda^{lam_1} V_n (x) ... : tuples (S_1, ..., S_l)
of sorted subsets of {1..n} with |S_j| = lam_j, ordered lexicographically
on the concatenated lists.  Merges act by wedging (sign of the sorting
permutation), splits by the signed shuffle sum and crossings by
v (x) w -> (-1)^{ab} w (x) v.

Three independent routes to the matrix of phi_A are provided:

* :func:`sigma_eval` multiplies generator matrices along a reduced chicken
  foot word of type A;
* :func:`phi_apply` evaluates the same composite on one basis vector in
  closed form (split every source subset, reorder, wedge into rows), which
  is what the hom-space and trace computations use;
* :func:`haircut_matrix` lifts to V_n^{(x) d}, acts on the right by the
  signed coset sum over (S_mu / S_mu+)_min d_A^{-1} and projects.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from math import comb, prod
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse

from .arith import multinomial
from .schur import (PlanMatrix, SchurMorphism, col_sums, double_coset_perm,
                    inverse_perm, inversions, nonzero_col_reading, plan,
                    plan_matrices, row_sums)
from .weights import dominant_sort, index_tuples, partitions, ssyt_count
from .web import WebGenerator, WebWord, chicken_foot_word

Subsets = tuple[tuple[int, ...], ...]

_INT64_SAFE = 2**62


# ------------------------------------------------------------ exact matrices

class ExactMatrix:
    """Dense integer matrix (numpy int64, or Python ints when large)."""

    def __init__(self, data, rows: Sequence | None = None, cols: Sequence | None = None):
        arr = np.asarray(data)
        if arr.dtype != object:
            arr = arr.astype(np.int64)
        if arr.ndim != 2:
            arr = arr.reshape(len(rows) if rows is not None else 0,
                              len(cols) if cols is not None else 0)
        self.data = arr
        self.rows = list(rows) if rows is not None else None
        self.cols = list(cols) if cols is not None else None

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(safe_matmul(self.data, other.data), self.rows, other.cols)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(self.data + other.data, self.rows, self.cols)

    def __rmul__(self, k: int) -> "ExactMatrix":
        return ExactMatrix(k * self.data, self.rows, self.cols)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self.data == other.data))

    def trace(self) -> int:
        return int(sum(int(x) for x in np.diagonal(self.data)))

    def mod(self, p: int) -> "ExactMatrix":
        return ExactMatrix(np.mod(self.data, p), self.rows, self.cols)

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in r] for r in self.data]

    def rank_q(self) -> int:
        return rank_q(self.data)

    def rank_mod_p(self, p: int) -> int:
        return rank_mod_p(self.data, p)

    def __repr__(self):
        return f"ExactMatrix({self.tolist()})"


def safe_matmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if x.dtype != object and y.dtype != object and x.size and y.size:
        bound = int(np.abs(x).max()) * int(np.abs(y).max()) * max(1, x.shape[1])
        if bound < _INT64_SAFE:
            return x @ y
    return np.asarray(x, dtype=object) @ np.asarray(y, dtype=object)


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank over Q by fraction-free elimination on Python integers."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nr, nc = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(nc):
        pivot = next((r for r in range(rank, nr) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        piv = m[rank][col]
        for r in range(rank + 1, nr):
            f = m[r][col]
            row_r, row_p = m[r], m[rank]
            for c in range(col + 1, nc):
                row_r[c] = (piv * row_r[c] - f * row_p[c]) // prev
            row_r[col] = 0
        prev = piv
        rank += 1
        if rank == nr:
            break
    return rank


def rank_q(data) -> int:
    """Exact rank over Q.  A wide matrix M is replaced by the small Gram
    matrix M M^T, which has the same rank over the reals."""
    arr = np.asarray(data)
    if arr.size == 0:
        return 0
    if arr.shape[0] > arr.shape[1]:
        arr = arr.T
    if arr.shape[1] > 2 * arr.shape[0]:
        gram = safe_matmul(arr, arr.T)
        return bareiss_rank([[int(x) for x in r] for r in gram])
    return bareiss_rank([[int(x) for x in r] for r in arr])


def rank_mod_p(data, p: int) -> int:
    """Rank over F_p by Gaussian elimination (vectorised row operations)."""
    m = np.mod(np.asarray(data, dtype=object), p).astype(np.int64)
    if m.size == 0:
        return 0
    nr, nc = m.shape
    rank = 0
    for col in range(nc):
        if rank == nr:
            break
        nz = np.nonzero(m[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        inv = pow(int(m[rank, col]), -1, p)
        m[rank] = (m[rank] * inv) % p
        below = np.nonzero(m[rank + 1:, col])[0] + rank + 1
        if below.size:
            m[below] = (m[below] - np.outer(m[below, col], m[rank])) % p
        rank += 1
    return rank


# ------------------------------------------------------------------ bases

@lru_cache(maxsize=None)
def ext_basis(lam: tuple[int, ...], n: int) -> tuple[Subsets, ...]:
    per = [list(combinations(range(1, n + 1), a)) for a in lam]
    return tuple(product(*per))


@lru_cache(maxsize=None)
def ext_index(lam: tuple[int, ...], n: int) -> dict[Subsets, int]:
    return {b: k for k, b in enumerate(ext_basis(lam, n))}


def ext_dim(lam: Sequence[int], n: int) -> int:
    return prod(comb(n, a) for a in lam)


def shuffle_sign(first: Sequence[int], second: Sequence[int]) -> int:
    """Sign of the permutation sorting first + second (both sorted)."""
    inv = sum(1 for x in first for y in second if x > y)
    return -1 if inv % 2 else 1


def sort_sign(seq: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """(sign, sorted tuple); sign 0 if there is a repeat."""
    s = list(seq)
    if len(set(s)) != len(s):
        return 0, ()
    inv = sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])
    return (-1 if inv % 2 else 1), tuple(sorted(s))


# ------------------------------------------------------- generator matrices

@lru_cache(maxsize=None)
def _generator_dense(kind: str, a: int, b: int, n: int) -> np.ndarray:
    if kind == "merge":
        src, tgt = (a, b), (a + b,)
    elif kind == "split":
        src, tgt = (a + b,), (a, b)
    elif kind == "cross":
        src, tgt = (a, b), (b, a)
    else:
        raise ValueError(kind)
    rows, cols = ext_index(tgt, n), ext_basis(src, n)
    m = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for k, vec in enumerate(cols):
        if kind == "merge":
            sign, s = sort_sign(vec[0] + vec[1])
            if sign:
                m[rows[(s,)], k] += sign
        elif kind == "split":
            whole = vec[0]
            for part in combinations(whole, a):
                rest = tuple(x for x in whole if x not in part)
                m[rows[(part, rest)], k] += shuffle_sign(part, rest)
        else:
            m[rows[(vec[1], vec[0])], k] += (-1) ** (a * b)
    return m


def generator_matrix(kind: str, a: int, b: int, n: int) -> ExactMatrix:
    """Sigma_n of a two-fold merge (a,b)->(a+b), split (a+b)->(a,b) or
    crossing (a,b)->(b,a)."""
    if a < 1 or b < 1:
        raise ValueError("thicknesses must be positive")
    src = {"merge": (a, b), "split": (a + b,), "cross": (a, b)}[kind]
    tgt = {"merge": (a + b,), "split": (a, b), "cross": (b, a)}[kind]
    return ExactMatrix(_generator_dense(kind, a, b, n), ext_basis(tgt, n), ext_basis(src, n))


def _layer_sparse(g: WebGenerator, obj: tuple[int, ...], n: int):
    i = g.pos - 1
    if g.kind == "split":
        core = _generator_dense("split", g.a, g.b, n)
        width = 1
    else:
        core = _generator_dense(g.kind, obj[i], obj[i + 1], n)
        width = 2
    left = ext_dim(obj[:i], n)
    right = ext_dim(obj[i + width:], n)
    mat = sparse.csr_matrix(core)
    return sparse.kron(sparse.kron(sparse.identity(left, dtype=np.int64, format="csr"), mat),
                       sparse.identity(right, dtype=np.int64, format="csr"), format="csr")


def word_matrix(w: WebWord, n: int) -> ExactMatrix:
    """Product of the layer matrices of a web word."""
    objs = w.objects()
    acc = sparse.identity(ext_dim(w.bottom, n), dtype=np.int64, format="csr")
    for g, obj in zip(w.layers, objs):
        acc = _layer_sparse(g, obj, n) @ acc
    return ExactMatrix(acc.toarray(), ext_basis(w.top, n), ext_basis(w.bottom, n))


def sigma_eval(f: SchurMorphism, n: int) -> ExactMatrix:
    """Matrix of Sigma_n(f), each xi_A factored along its chicken foot word."""
    rows, cols = ext_basis(f.target, n), ext_basis(f.source, n)
    out = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for a, c in f.items():
        out = out + c * word_matrix(chicken_foot_word(a), n).data
    return ExactMatrix(out, rows, cols)


# ------------------------------------------------- closed-form phi_A

@lru_cache(maxsize=None)
def _crossing_sign(a: PlanMatrix) -> int:
    s = 0
    cells = nonzero_col_reading(a)
    for x in range(len(cells)):
        i, j, v = cells[x]
        for y in range(x + 1, len(cells)):
            i2, j2, v2 = cells[y]
            if j < j2 and i > i2:
                s += v * v2
    return -1 if s % 2 else 1


def phi_apply(a: PlanMatrix, vec: Subsets,
              target: Subsets | None = None) -> dict[Subsets, int]:
    """phi_A applied to the basis vector vec, as {basis vector: coefficient}.

    Each source subset S_j is cut into blocks P_{1j}, P_{2j}, ... of sizes
    a_{1j}, a_{2j}, ... (shuffle sign), the blocks are reordered from column
    reading to row reading (crossing sign) and the blocks of each row are
    wedged together (sorting sign).  If target is given only that
    coefficient is computed, pruning blocks that cannot land in it.
    """
    nrows = len(a)
    ncols = len(vec)
    base = _crossing_sign(a)
    out: dict[Subsets, int] = {}
    rows_acc: list[list[int]] = [[] for _ in range(nrows)]
    used: list[set[int]] = [set() for _ in range(nrows)]
    tsets = [set(t) for t in target] if target is not None else None

    def col_rec(j: int, sign: int):
        if j == ncols:
            total = sign
            key = []
            for i in range(nrows):
                s, srt = sort_sign(rows_acc[i])
                total *= s
                key.append(srt)
            key = tuple(key)
            if target is not None and key != target:
                return
            out[key] = out.get(key, 0) + total
            return
        split_rec(j, 0, vec[j], sign)

    def split_rec(j: int, i: int, remaining: tuple[int, ...], sign: int):
        if i == nrows:
            col_rec(j + 1, sign)
            return
        k = a[i][j]
        if k == 0:
            split_rec(j, i + 1, remaining, sign)
            return
        if i == nrows - 1 or all(a[r][j] == 0 for r in range(i + 1, nrows)):
            choices = [remaining] if len(remaining) == k else []
        else:
            choices = combinations(remaining, k)
        for part in choices:
            if any(x in used[i] for x in part):
                continue
            if tsets is not None and any(x not in tsets[i] for x in part):
                continue
            rest = tuple(x for x in remaining if x not in part)
            s = shuffle_sign(part, rest)
            rows_acc[i].extend(part)
            used[i].update(part)
            split_rec(j, i + 1, rest, sign * s)
            del rows_acc[i][-k:]
            used[i].difference_update(part)

    col_rec(0, base)
    return {k: v for k, v in out.items() if v}


def phi_matrix(a: PlanMatrix, n: int) -> ExactMatrix:
    """phi_A on the full basis via :func:`phi_apply`."""
    a = plan(a)
    lam, mu = row_sums(a), col_sums(a)
    rows, cols = ext_index(lam, n), ext_basis(mu, n)
    m = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for k, vec in enumerate(cols):
        for t, c in phi_apply(a, vec).items():
            m[rows[t], k] += c
    return ExactMatrix(m, ext_basis(lam, n), cols)


# ------------------------------------------------- coset-sum oracle

def _young_blocks(parts: Sequence[int]) -> list[range]:
    out, start = [], 0
    for p in parts:
        out.append(range(start, start + p))
        start += p
    return out


def _min_coset_reps(mu: Sequence[int], mu_plus: Sequence[int]) -> list[tuple[int, ...]]:
    """(S_mu / S_mu+)_min: permutations preserving the mu blocks and
    increasing on each mu+ block (0-based one-line lists)."""
    d = sum(mu)
    fine = _young_blocks(mu_plus)
    block_of = [0] * d
    for b, r in enumerate(fine):
        for x in r:
            block_of[x] = b
    reps = [[]]
    for blk in _young_blocks(mu):
        sub_parts = []
        for b in sorted({block_of[x] for x in blk}):
            sub_parts.append(len(fine[b]))
        new = []
        for choice in _ordered_set_partitions(list(blk), sub_parts):
            images = [x for part in choice for x in part]
            for r in reps:
                new.append(r + images)
        reps = new
    return [tuple(r) for r in reps]


def _ordered_set_partitions(items: list[int], sizes: list[int]):
    if not sizes:
        yield []
        return
    for first in combinations(items, sizes[0]):
        rest = [x for x in items if x not in first]
        for tail in _ordered_set_partitions(rest, sizes[1:]):
            yield [list(first)] + tail


def haircut_matrix(a: PlanMatrix, n: int) -> ExactMatrix:
    """phi_A via the right action of sum_g (-1)^{l(g d^-1)} g d^-1 on the
    tensor space, lifted along v_S -> v_{S_1} (x) v_{S_2} (x) ... ."""
    a = plan(a)
    lam, mu = row_sums(a), col_sums(a)
    mu_plus = [v for _, _, v in nonzero_col_reading(a)]
    d_inv = [x - 1 for x in inverse_perm(double_coset_perm(a))]
    elements = []
    for g in _min_coset_reps(mu, mu_plus):
        h = tuple(g[d_inv[r]] for r in range(len(g)))   # (g d^{-1})(r) = g(d^{-1}(r))
        elements.append((-1 if inversions(h) % 2 else 1, h))
    rows, cols = ext_index(lam, n), ext_basis(mu, n)
    m = np.zeros((len(rows), len(cols)), dtype=np.int64)
    blocks = _young_blocks(lam)
    for k, vec in enumerate(cols):
        i = [x for s in vec for x in s]
        for sign, h in elements:
            moved = [i[h[r]] for r in range(len(h))]     # (i . h)_r = i_{h(r)}
            total, key = sign, []
            for blk in blocks:
                s, srt = sort_sign([moved[r] for r in blk])
                total *= s
                key.append(srt)
            if total:
                m[rows[tuple(key)], k] += total
    return ExactMatrix(m, ext_basis(lam, n), cols)


# ------------------------------------------------- tensor-space oracle

def tensor_oracle_xi(a: PlanMatrix, n: int) -> ExactMatrix:
    """xi_A on weight spaces of V_n^{(x) d}: v_j -> sum over (i, j) in Pi_A of v_i."""
    a = plan(a)
    lam, mu = row_sums(a), col_sums(a)
    if n < max(len(lam), len(mu)):
        raise ValueError(f"rank {n} too small for objects {lam}, {mu}")
    rows = index_tuples(lam)
    cols = index_tuples(mu)
    ridx = {r: k for k, r in enumerate(rows)}
    m = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for k, j in enumerate(cols):
        # distribute the positions carrying letter y among the rows x, a_{xy} each
        groups = [[r for r in range(len(j)) if j[r] == y + 1] for y in range(len(mu))]
        choices = []
        for y, pos in enumerate(groups):
            sizes = [a[x][y] for x in range(len(lam))]
            choices.append(list(_ordered_set_partitions(pos, sizes)))
        for combo in product(*choices):
            i = [0] * len(j)
            for parts in combo:
                for x, part in enumerate(parts):
                    for r in part:
                        i[r] = x + 1
            m[ridx[tuple(i)], k] += 1
    return ExactMatrix(m, rows, cols)


def weight_space_dim(mu: Sequence[int]) -> int:
    return multinomial(mu)


# ------------------------------------------------- weight-space restriction

@lru_cache(maxsize=None)
def weight_basis(lam: tuple[int, ...], w: tuple[int, ...]) -> tuple[Subsets, ...]:
    """Basis vectors of Lambda^lam V_n of weight w (n = len(w))."""
    n = len(w)
    out = []

    def rec(j: int, left: list[int], acc: list[tuple[int, ...]]):
        if j == len(lam):
            if not any(left):
                out.append(tuple(acc))
            return
        avail = [x for x in range(1, n + 1) if left[x - 1] > 0]
        for s in combinations(avail, lam[j]):
            for x in s:
                left[x - 1] -= 1
            acc.append(s)
            rec(j + 1, left, acc)
            acc.pop()
            for x in s:
                left[x - 1] += 1

    rec(0, list(w), [])
    return tuple(sorted(out))


def dominant_weights(d: int, n: int, max_entry: int | None = None) -> list[tuple[int, ...]]:
    out = []
    for p in partitions(d):
        if len(p) <= n and (max_entry is None or not p or p[0] <= max_entry):
            out.append(p + (0,) * (n - len(p)))
    return out


def orbit_size(w: Sequence[int]) -> int:
    counts: dict[int, int] = {}
    for x in w:
        counts[x] = counts.get(x, 0) + 1
    return multinomial(list(counts.values()))


def restricted_vector(a: PlanMatrix, n: int) -> list[int]:
    """Entries of phi_A on all dominant weight spaces, concatenated.

    A G_n-map between these modules is determined by its restriction to
    the dominant weight spaces (permutation matrices in G_n move every
    weight space onto a dominant one), so ranks of families of phi_A can
    be read off these vectors.
    """
    lam, mu = row_sums(a), col_sums(a)
    d = sum(lam)
    out: list[int] = []
    for w in dominant_weights(d, n, max_entry=min(len(lam), len(mu))):
        src = weight_basis(mu, w)
        tgt = weight_basis(lam, w)
        if not src or not tgt:
            continue
        tidx = {t: k for k, t in enumerate(tgt)}
        block = [0] * (len(src) * len(tgt))
        for c, vec in enumerate(src):
            for t, v in phi_apply(a, vec).items():
                block[tidx[t] * len(src) + c] += v
        out.extend(block)
    return out


def hom_dim_Q(mu: Sequence[int], lam: Sequence[int], n: int) -> int:
    """dim over Q of the span of {phi_A : A in Mat_{lam, mu}}."""
    mu, lam = tuple(mu), tuple(lam)
    if sum(mu) != sum(lam):
        return 0
    if sum(mu) == 0:
        return 1
    rows = [restricted_vector(a, n) for a in plan_matrices(lam, mu)]
    if not rows or not rows[0]:
        return 0
    return rank_q(np.array(rows, dtype=np.int64))


def tableau_count(mu: Sequence[int], lam: Sequence[int], n: int) -> int:
    """#{(kappa, P, Q) : kappa_1 <= n, P in Std(lam, kappa), Q in Std(mu, kappa)}."""
    mu, lam = tuple(mu), tuple(lam)
    d = sum(lam)
    if sum(mu) != d:
        raise ValueError("degree mismatch")
    total = 0
    for kappa in partitions(d):
        if kappa and kappa[0] > n:
            continue
        total += ssyt_count(lam, kappa) * ssyt_count(mu, kappa)
    return total


# ------------------------------------------------- traces

def phi_trace(a: PlanMatrix, n: int) -> int:
    """Trace of the endomorphism phi_A, summed over dominant weights with
    orbit multiplicities (the trace is the same on S_n-conjugate weights)."""
    lam = row_sums(a)
    if col_sums(a) != lam:
        raise ValueError("not an endomorphism")
    return phi_traces((a,), n)[0]


def phi_traces(plans: Iterable[PlanMatrix], n: int) -> list[int]:
    plans = list(plans)
    if not plans:
        return []
    lam = row_sums(plans[0])
    d = sum(lam)
    if d == 0:
        return [1] * len(plans)
    out = [0] * len(plans)
    for w in dominant_weights(d, n, max_entry=len(lam)):
        basis = weight_basis(lam, w)
        if not basis:
            continue
        mult = orbit_size(w)
        for k, a in enumerate(plans):
            s = 0
            for vec in basis:
                s += phi_apply(a, vec, target=vec).get(vec, 0)
            out[k] += mult * s
    return out
