"""Weights for the factorisation of tilting modules along the p-adic digits
of n: the embedding iota, its inverse, and dim T_n(lam) mod p.

With n = n_0 + n_1 p + ... + n_r p^r, a tuple (lam^(0), ..., lam^(r)) of
GL_{n_i}-weights goes to the dominant sort of the concatenation of p^i
copies of each lam^(i).  On column heights this reads
iota(tuple)^T = sum_i p^i (lam^(i))^T, and since every column of lam^(i)
has height at most n_i < p the digits of each column height recover the
tuple.
"""
from __future__ import annotations

from math import prod
from typing import Sequence

from .arith import FpScalar, p_adic_digits, require_prime, weyl_dim
from .weights import dominant_sort, is_dominant, transpose

WeightTuple = tuple[tuple[int, ...], ...]


class TiltingError(ValueError):
    pass


def digits_of(n: int, p: int) -> tuple[int, ...]:
    return p_adic_digits(n, p)


def in_alcove(lam: Sequence[int], p: int) -> bool:
    """lam_1 - lam_m < p - m + 1 (always true for m = 0)."""
    m = len(lam)
    if m == 0:
        return True
    return lam[0] - lam[-1] < p - m + 1


def iota(components: Sequence[Sequence[int]], p: int, n: int | None = None) -> tuple[int, ...]:
    """Dominant sort of lam^(0) followed by p^i copies of each lam^(i).

    >>> iota(((1, 0, 0), (1, 0)), 5)
    (1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0)
    """
    require_prime(p)
    comps = [tuple(c) for c in components]
    for c in comps:
        if not is_dominant(c):
            raise TiltingError(f"{c} is not dominant")
        if len(c) >= p:
            raise TiltingError(f"component {c} has rank >= p")
    total = sum(len(c) * p**i for i, c in enumerate(comps))
    if n is not None:
        digits = p_adic_digits(n, p)
        ranks = tuple(len(c) for c in comps)
        width = max(len(digits), len(ranks))
        if digits + (0,) * (width - len(digits)) != ranks + (0,) * (width - len(ranks)):
            raise TiltingError(f"component ranks {ranks} do not match the digits {digits} of {n}")
    assert n is None or total == n
    out: list[int] = []
    for i, c in enumerate(comps):
        out.extend(c * p**i)
    return dominant_sort(out)


def decompose_weight(lam: Sequence[int], n: int, p: int) -> WeightTuple | None:
    """The tuple t with iota(t) = lam and every component in its alcove,
    or None if lam is not in X+_{n,p}.  For p = 0 the answer is (lam,)."""
    lam = tuple(lam)
    if len(lam) != n:
        raise TiltingError(f"weight {lam} does not have rank {n}")
    if not is_dominant(lam):
        raise TiltingError(f"{lam} is not dominant")
    if p == 0:
        return (lam,)
    require_prime(p)
    if n == 0:
        return ()
    digits = p_adic_digits(n, p)
    c = -lam[-1]
    poly = tuple(x + c for x in lam)
    heights = transpose(poly)
    profiles: list[list[int]] = [[] for _ in digits]
    for k in heights:
        for i in range(len(digits)):
            ki = (k // p**i) % p
            if ki > digits[i]:
                return None
            profiles[i].append(ki)
    comps = []
    for i, prof in enumerate(profiles):
        if any(prof[j] < prof[j + 1] for j in range(len(prof) - 1)):
            return None
        part = transpose(prof)
        part = part + (0,) * (digits[i] - len(part))
        comp = tuple(x - c for x in part)
        if not in_alcove(comp, p):
            return None
        comps.append(comp)
    result = tuple(comps)
    assert iota(result, p) == lam
    return result


def membership(lam: Sequence[int], n: int, p: int) -> bool:
    """Is lam in X+_{n,p}?"""
    return p == 0 or decompose_weight(lam, n, p) is not None


def tilt_dim_mod_p(lam: Sequence[int], n: int, p: int) -> FpScalar:
    """dim T_n(lam) mod p: the product of Weyl dimensions of the components,
    and zero off X+_{n,p}."""
    require_prime(p)
    t = decompose_weight(lam, n, p)
    if t is None:
        return FpScalar(0, p)
    return FpScalar(prod(weyl_dim(c) for c in t), p)


def fundamental(k: int, n: int) -> tuple[int, ...]:
    """varpi_k = (1^k, 0^{n-k})."""
    if not 0 <= k <= n:
        raise TiltingError(f"no fundamental weight varpi_{k} for rank {n}")
    return (1,) * k + (0,) * (n - k)


def valid_tuples(n: int, p: int, lo: int, hi: int) -> list[WeightTuple]:
    """All alcove-valid tuples with entries in [lo, hi] (for small cases)."""
    from itertools import combinations_with_replacement

    per = []
    for m in p_adic_digits(n, p):
        opts = [tuple(sorted(c, reverse=True))
                for c in combinations_with_replacement(range(lo, hi + 1), m)]
        per.append([c for c in opts if in_alcove(c, p)])
    out: list[WeightTuple] = [()]
    for opts in per:
        out = [t + (c,) for t in out for c in opts]
    return out

