"""Semisimplification by negligible morphisms, computed with trace forms.

For words X, Y (tensor products of exterior powers of V_n) the image of
Hom(X, Y) in the semisimplified category has dimension equal to the rank
over F_p of the pairing

    G[A, B] = Tr(phi_B o phi_A),   A in Mat_{Y, X},  B in Mat_{X, Y},

because the phi_A span Hom_{G_n}(X, Y) over any field and a morphism is
negligible exactly when it pairs to zero with everything.  Since Sigma_n
is a functor, phi_B o phi_A = sum_C Z(B, A, C) phi_C, so only the traces of
the endomorphisms phi_C of X are needed; those are computed weight space
by weight space on dominant weights only.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb, prod
from typing import Sequence

import numpy as np
from scipy import sparse

from .arith import FpScalar, require_prime
from .exterior import phi_traces, rank_mod_p, sigma_eval
from .schur import PlanMatrix, SchurMorphism, compose_basis, plan_matrices

Word = tuple[int, ...]


class SsimpError(ValueError):
    pass


def parse_word(text: str) -> Word:
    """Parse "1 2 2" (commas are also accepted)."""
    toks = text.replace(",", " ").split()
    w = tuple(int(t) for t in toks)
    if any(x <= 0 for x in w):
        raise SsimpError("letters must be positive thicknesses")
    return w


def object_dim_mod_p(x: Sequence[int], n: int, p: int) -> FpScalar:
    """Dimension of Lambda^{x_1} V_n (x) ... reduced mod p."""
    require_prime(p)
    return FpScalar(prod(comb(n, w) for w in x), p)


@lru_cache(maxsize=None)
def _endo_traces(x: Word, n: int) -> tuple[tuple[PlanMatrix, ...], np.ndarray]:
    ends = plan_matrices(x, x)
    return ends, np.array(phi_traces(ends, n), dtype=object)


@lru_cache(maxsize=64)
def _pairing_structure(x: Word, y: Word):
    """Sparse matrix Z with Z[(A, B), C] = Z(B, A, C), rows ordered A-major."""
    homs_xy = plan_matrices(y, x)
    homs_yx = plan_matrices(x, y)
    ends = plan_matrices(x, x)
    cidx = {c: k for k, c in enumerate(ends)}
    rows, cols, vals = [], [], []
    nb = len(homs_yx)
    for i, a in enumerate(homs_xy):
        for j, b in enumerate(homs_yx):
            for c, z in compose_basis.__wrapped__(b, a):
                rows.append(i * nb + j)
                cols.append(cidx[c])
                vals.append(z)
    z = sparse.csr_matrix((np.array(vals, dtype=np.int64), (rows, cols)),
                          shape=(len(homs_xy) * nb, len(ends)))
    return homs_xy, homs_yx, z


def pairing_matrix(x: Sequence[int], y: Sequence[int], n: int) -> np.ndarray:
    """Integer matrix of traces Tr(phi_B phi_A), rows A in Mat_{Y,X},
    columns B in Mat_{X,Y}."""
    x, y = tuple(x), tuple(y)
    homs_xy, homs_yx, z = _pairing_structure(x, y)
    _, traces = _endo_traces(x, n)
    if z.shape[0] == 0:
        return np.zeros((len(homs_xy), len(homs_yx)), dtype=object)
    if all(abs(int(t)) < 2**40 for t in traces):
        g = z @ traces.astype(np.int64)
    else:
        g = np.array([sum(int(v) * int(traces[c]) for c, v in zip(z[r].indices, z[r].data))
                      for r in range(z.shape[0])], dtype=object)
    return np.asarray(g).reshape(len(homs_xy), len(homs_yx))


def pairing_matrix_literal(x: Sequence[int], y: Sequence[int], n: int) -> np.ndarray:
    """The same pairing by multiplying full matrices (small cases only)."""
    x, y = tuple(x), tuple(y)
    fs = [sigma_eval(SchurMorphism(x, y, {a: 1}), n) for a in plan_matrices(y, x)]
    gs = [sigma_eval(SchurMorphism(y, x, {b: 1}), n) for b in plan_matrices(x, y)]
    return np.array([[(g @ f).trace() for g in gs] for f in fs], dtype=object)


def canonical_word(x: Sequence[int]) -> Word:
    """Letters sorted decreasingly; crossings make X and this isomorphic."""
    return tuple(sorted(x, reverse=True))


@lru_cache(maxsize=None)
def _gram_rank(x: Word, y: Word, n: int, p: int) -> int:
    g = pairing_matrix(x, y, n)
    if g.size == 0:
        return 0
    return rank_mod_p(g, p)


def gram_rank(x: Sequence[int], y: Sequence[int], n: int, p: int,
              canonical: bool = True) -> int:
    """dim Hom(X, Y) after killing negligible morphisms, over F_p."""
    require_prime(p)
    x, y = tuple(x), tuple(y)
    if any(w <= 0 for w in x + y):
        raise SsimpError("letters must be positive thicknesses")
    if sum(x) != sum(y):
        return 0
    if not x and not y:
        return 1
    if canonical:
        x, y = canonical_word(x), canonical_word(y)
    return _gram_rank(x, y, n, p)


def pairing_row(f: SchurMorphism, n: int) -> list[int]:
    """[Tr(phi_B o Sigma_n(f)) for B in Mat_{source, target}]."""
    x, y = f.source, f.target
    ends, traces = _endo_traces(x, n)
    cidx = {c: k for k, c in enumerate(ends)}
    out = []
    for b in plan_matrices(x, y):
        t = 0
        for a, coeff in f.items():
            for c, z in compose_basis(b, a):
                t += coeff * z * int(traces[cidx[c]])
        out.append(t)
    return out


def gray_check(m: int, a: int, n: int, p: int) -> bool:
    """Are the merge (a, b) -> (p^m) and the split (p^m) -> (a, b),
    b = p^m - a, both negligible?"""
    require_prime(p)
    q = p**m
    if not 0 < a < q:
        raise SsimpError(f"need 0 < a < p^m = {q}")
    if q > n:
        return True
    b = q - a
    merge = SchurMorphism((a, b), (q,), {((a, b),): 1})
    split = SchurMorphism((q,), (a, b), {((a,), (b,)): 1})
    return all(t % p == 0 for f in (merge, split) for t in pairing_row(f, n))
