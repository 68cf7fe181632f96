"""Fusion rings of the semisimplified tilting categories of GL_m with p > m,
and Hom dimensions in their products.

Tensor products are computed in characteristic zero with the
Littlewood-Richardson rule and then folded into the fundamental alcove:
with rho = (m-1, ..., 0), a weight nu with nu + rho on a wall (two entries
congruent mod p) contributes nothing, and otherwise it is carried by the
affine Weyl group (permutations and translations by p(e_i - e_j)) to the
unique alcove weight, contributing the sign of the permutation used.
This folding rule is not stated explicitly in the source material; it is
validated against independent trace-form ranks in the test suite.
"""
from __future__ import annotations

from functools import lru_cache
from math import prod
from typing import Mapping, Sequence

from .arith import p_adic_digits, require_prime
from .tilting import in_alcove, iota
from .weights import compositions, horizontal_strips, is_dominant, ssyt_count, trim

FusionVector = dict[tuple[int, ...], int]


class VerlindeError(ValueError):
    pass


# ------------------------------------------------------ Littlewood-Richardson

@lru_cache(maxsize=None)
def lr_partitions(lam: tuple[int, ...], mu: tuple[int, ...],
                  max_rows: int | None = None) -> tuple[tuple[tuple[int, ...], int], ...]:
    """LR coefficients c^nu_{lam,mu} for partitions, as ((nu, c), ...).

    Skew tableaux of shape nu/lam and content mu are grown one letter at a
    time by horizontal strips; a filling counts when its reverse row
    reading word (right to left, top to bottom) is a lattice word.
    """
    lam, mu = trim(lam), trim(mu)
    counts: dict[tuple[int, ...], int] = {}

    def rec(k: int, shape: tuple[int, ...], cells: dict[tuple[int, int], int]):
        if k == len(mu):
            if _is_lattice(shape, cells):
                counts[shape] = counts.get(shape, 0) + 1
            return
        for nxt in horizontal_strips((), shape, mu[k], max_rows):
            new = dict(cells)
            for i, a in enumerate(nxt):
                start = shape[i] if i < len(shape) else 0
                for j in range(start, a):
                    new[(i, j)] = k + 1
            rec(k + 1, nxt, new)

    rec(0, lam, {})
    return tuple(sorted(counts.items(), reverse=True))


def _is_lattice(shape: tuple[int, ...], cells: dict[tuple[int, int], int]) -> bool:
    seen: dict[int, int] = {}
    for i in range(len(shape)):
        for j in range(shape[i] - 1, -1, -1):
            x = cells.get((i, j))
            if x is None:
                continue
            seen[x] = seen.get(x, 0) + 1
            if x > 1 and seen[x] > seen.get(x - 1, 0):
                return False
    return True


def lr_tensor(lam: Sequence[int], mu: Sequence[int], m: int | None = None) -> FusionVector:
    """Characteristic-zero decomposition of Delta(lam) (x) Delta(mu) for GL_m."""
    lam, mu = tuple(lam), tuple(mu)
    if m is None:
        m = len(lam)
    if len(lam) != m or len(mu) != m:
        raise VerlindeError(f"weights must have rank {m}")
    if not (is_dominant(lam) and is_dominant(mu)):
        raise VerlindeError("weights must be dominant")
    if m == 0:
        return {(): 1}
    cl, cm = -lam[-1], -mu[-1]
    pl = tuple(x + cl for x in lam)
    pm = tuple(x + cm for x in mu)
    out: FusionVector = {}
    for nu, c in lr_partitions(trim(pl), trim(pm), m):
        full = tuple(nu) + (0,) * (m - len(nu))
        out[tuple(x - cl - cm for x in full)] = c
    return out


def schur_poly(lam: tuple[int, ...], m: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of s_lam(x_1..x_m): exponent -> Kostka number."""
    d = sum(lam)
    out = {}
    for alpha in compositions(d, m):
        k = ssyt_count(alpha, trim(lam))
        if k:
            out[alpha] = k
    return out


def lr_tensor_oracle(lam: Sequence[int], mu: Sequence[int], m: int) -> FusionVector:
    """Decompose s_lam s_mu by expanding into monomials and peeling off the
    dominant leading terms (polynomial weights only)."""
    a, b = schur_poly(tuple(lam), m), schur_poly(tuple(mu), m)
    prodm: dict[tuple[int, ...], int] = {}
    for x, cx in a.items():
        for y, cy in b.items():
            z = tuple(i + j for i, j in zip(x, y))
            prodm[z] = prodm.get(z, 0) + cx * cy
    out: FusionVector = {}
    while True:
        prodm = {k: v for k, v in prodm.items() if v}
        if not prodm:
            return out
        lead = max(k for k in prodm if is_dominant(k))
        c = prodm[lead]
        out[lead] = c
        for k, v in schur_poly(lead, m).items():
            prodm[k] = prodm.get(k, 0) - c * v


# ------------------------------------------------------ alcove straightening

def alcove_straighten(nu: Sequence[int], m: int, p: int) -> tuple[int, tuple[int, ...]] | None:
    """None if nu + rho lies on a wall, else (sign, alcove weight)."""
    nu = tuple(nu)
    if len(nu) != m:
        raise VerlindeError(f"weight {nu} does not have rank {m}")
    if m == 0:
        return 1, ()
    rho = tuple(range(m - 1, -1, -1))
    v = [x + r for x, r in zip(nu, rho)]
    if len({x % p for x in v}) < m:
        return None
    target = sum(v)
    # lift every entry into [c, c + p - 1]; the lifted sum is nondecreasing in c
    c = min(v)
    lifted = _lift(v, c, p)
    while sum(lifted) < target:
        c += 1
        lifted = _lift(v, c, p)
    while sum(lifted) > target:
        c -= 1
        lifted = _lift(v, c, p)
    inv = sum(1 for i in range(m) for j in range(i + 1, m) if lifted[i] < lifted[j])
    ordered = sorted(lifted, reverse=True)
    return (-1 if inv % 2 else 1), tuple(x - r for x, r in zip(ordered, rho))


def _lift(v: list[int], c: int, p: int) -> list[int]:
    return [c + (x - c) % p for x in v]


# --------------------------------------------------------------- fusion

@lru_cache(maxsize=None)
def _fuse(lam: tuple[int, ...], mu: tuple[int, ...], p: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    m = len(lam)
    acc: FusionVector = {}
    for nu, c in lr_tensor(lam, mu, m).items():
        s = alcove_straighten(nu, m, p)
        if s is None:
            continue
        sign, w = s
        acc[w] = acc.get(w, 0) + sign * c
    if any(v < 0 for v in acc.values()):
        raise AssertionError(f"negative fusion multiplicity in {lam} * {mu} at p={p}: {acc}")
    return tuple(sorted((k, v) for k, v in acc.items() if v))


def fuse(lam: Sequence[int], mu: Sequence[int], p: int) -> FusionVector:
    """Product of two simple objects of the Verlinde category of GL_m."""
    lam, mu = tuple(lam), tuple(mu)
    require_prime(p)
    m = len(lam)
    if len(mu) != m:
        raise VerlindeError("weights of different rank")
    if m >= p:
        raise VerlindeError(f"need p > m (m={m}, p={p})")
    for w in (lam, mu):
        if not is_dominant(w) or not in_alcove(w, p):
            raise VerlindeError(f"{w} is not an alcove weight for p={p}")
    return dict(_fuse(lam, mu, p))


def fuse_vectors(x: Mapping[tuple[int, ...], int], y: Mapping[tuple[int, ...], int],
                 p: int) -> FusionVector:
    out: FusionVector = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for w, c in fuse(a, b, p).items():
                out[w] = out.get(w, 0) + ca * cb * c
    return {k: v for k, v in out.items() if v}


def fundamental_power(k: int, m: int, p: int) -> FusionVector:
    """varpi_1 to the k-th fusion power in the GL_m Verlinde category;
    for m = 0 any positive power is the zero object."""
    if m == 0:
        return {(): 1} if k == 0 else {}
    acc: FusionVector = {(0,) * m: 1}
    one = {(1,) + (0,) * (m - 1): 1}
    for _ in range(k):
        acc = fuse_vectors(acc, one, p)
    return acc


# --------------------------------------------------------- products of factors

def letter_slot(letter: int, p: int) -> int:
    """i with letter = p^i."""
    if letter < 1:
        raise VerlindeError(f"letter {letter} is not a power of {p}")
    i = 0
    x = letter
    while x % p == 0:
        x //= p
        i += 1
    if x != 1:
        raise VerlindeError(f"letter {letter} is not a power of {p}")
    return i


def factor_decompositions(word: Sequence[int], n: int, p: int) -> list[FusionVector]:
    """For each digit slot i, the decomposition of the factor object
    varpi_1^{(x) k_i} in the GL_{n_i} Verlinde category, where k_i counts
    the letters p^i.  An empty dict marks a zero factor."""
    require_prime(p)
    digits = list(p_adic_digits(n, p))
    slots = [letter_slot(x, p) for x in word]
    width = max([len(digits)] + [s + 1 for s in slots])
    digits += [0] * (width - len(digits))
    counts = [0] * width
    for s in slots:
        counts[s] += 1
    return [fundamental_power(counts[i], digits[i], p) for i in range(width)]


def verlinde_hom_dim(x: Sequence[int], y: Sequence[int], n: int, p: int) -> int:
    """dim Hom(X, Y) in the product of Verlinde categories."""
    fx = factor_decompositions(x, n, p)
    fy = factor_decompositions(y, n, p)
    width = max(len(fx), len(fy))
    fx += [{(): 1}] * (width - len(fx))
    fy += [{(): 1}] * (width - len(fy))
    total = 1
    for a, b in zip(fx, fy):
        total *= sum(c * b.get(w, 0) for w, c in a.items())
    return total


def tilt_decompose_word(x: Sequence[int], n: int, p: int) -> dict[tuple[int, ...], int]:
    """Multiplicities of indecomposable tiltings T_n(lam), lam in X+_{n,p},
    in the image of the word X in the semisimplification."""
    factors = factor_decompositions(x, n, p)
    if any(not f for f in factors):
        return {}
    digits = p_adic_digits(n, p)
    factors = factors[:len(digits)]
    combos: list[tuple[tuple[tuple[int, ...], ...], int]] = [((), 1)]
    for f in factors:
        combos = [(t + (w,), c * m) for t, c in combos for w, m in f.items()]
    out: dict[tuple[int, ...], int] = {}
    for t, c in combos:
        lam = iota(t, p)
        out[lam] = out.get(lam, 0) + c
    return out
