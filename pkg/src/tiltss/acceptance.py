"""Named verification suites, one per acceptance criterion.

Each suite returns a :class:`SuiteResult`; ``run_suite`` adds the wall time
and compares it with the suite's time budget.  The CLI exposes these as
``tiltss verify <name>`` and the test suite runs all of them.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .arith import binomial, binomial_mod_p, density_scalar, lucas_product, trinomial_sum, weyl_dim
from .exterior import hom_dim_Q, tableau_count, tensor_oracle_xi
from .schur import (SchurMorphism, compose, compose_basis, double_coset_perm,
                    perm_to_cycles, plan_matrices, triple_decompose, z_coefficient,
                    z_coefficient_direct)
from .ssimp import gram_rank, gray_check, object_dim_mod_p
from .tilting import decompose_weight, fundamental, in_alcove, iota, tilt_dim_mod_p
from .verlinde import factor_decompositions, fuse, tilt_decompose_word, verlinde_hom_dim
from .weights import strict_compositions, transpose, trim
from .web import RELATIONS, check_relation, valid_parameters


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    limit: float = 0.0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed and self.seconds <= self.limit

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        timing = f"{self.seconds:.2f}s / {self.limit:g}s"
        return f"[{status}] {self.name}: {self.detail} ({timing})"


WORKED_A = ((1, 0, 3), (2, 2, 1))
MAIN_GRID = ((2, 2), (3, 2), (4, 2), (5, 2), (3, 3), (4, 3), (5, 3))


def suite_triple() -> SuiteResult:
    t = triple_decompose(WORKED_A)
    expected = dict(
        A_minus=((1, 3, 0, 0, 0), (0, 0, 2, 2, 1)),
        A_zero=((1, 0, 0, 0, 0), (0, 0, 0, 3, 0), (0, 2, 0, 0, 0), (0, 0, 2, 0, 0), (0, 0, 0, 0, 1)),
        A_plus=((1, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 3), (0, 0, 1)),
        lambda_minus=(1, 3, 2, 2, 1),
        mu_plus=(1, 2, 2, 3, 1),
    )
    bad = [k for k, v in expected.items() if getattr(t, k) != v]
    if perm_to_cycles(t.perm) != "(2 3 4)":
        bad.append("perm")
    if t.recompose() != SchurMorphism.basis(WORKED_A):
        bad.append("recomposition")
    return SuiteResult("triple decomposition", not bad,
                       "A-, A0, A+, lambda-, mu+, g=(2 3 4), recomposition" if not bad
                       else f"mismatch in {bad}", failures=bad)


def suite_dcoset() -> SuiteResult:
    got = perm_to_cycles(double_coset_perm(WORKED_A))
    return SuiteResult("double coset d_A", got == "(2 5 8 4 7 3 6)", f"d_A = {got}")


def suite_iota(samples: int = 20, seed: int = 13) -> SuiteResult:
    n, p = 13, 5
    bad = []
    known = [(((1, 0, 0), (0, 0)), fundamental(1, n)),
             (((0, 0, 0), (1, 0)), fundamental(5, n)),
             (((1, 0, 0), (1, 0)), fundamental(6, n))]
    for t, lam in known:
        if iota(t, p, n) != lam or decompose_weight(lam, n, p) != t:
            bad.append(t)
    rng = random.Random(seed)
    count = 0
    while count < samples:
        comps = []
        for m in (3, 2):
            base = rng.randint(-3, 3)
            spread = rng.randint(0, p - m)
            inner = sorted((rng.randint(0, spread) for _ in range(m - 2)), reverse=True)
            comps.append(tuple(base + x for x in [spread] + inner + [0])[:m] if m > 1
                         else (base,))
        t = tuple(comps)
        if not all(in_alcove(c, p) for c in t):
            continue
        count += 1
        lam = iota(t, p, n)
        # column form of iota: iota(t)^T = sum_i p^i (lam^(i))^T
        c = -min(min(x) for x in t)
        cols = [0] * 64
        for i, comp in enumerate(t):
            for j, h in enumerate(transpose(tuple(x + c for x in comp))):
                cols[j] += p**i * h
        if transpose(tuple(x + c for x in lam)) != trim(tuple(cols)):
            bad.append(("formula", t))
        if decompose_weight(lam, n, p) != t:
            bad.append(("roundtrip", t))
    return SuiteResult("iota at (p, n) = (5, 13)", not bad,
                       f"3 fundamental weights and {samples} random tuples" if not bad
                       else f"failures {bad[:3]}", failures=bad)


def suite_lucas() -> SuiteResult:
    bad = [(n, k, p) for p in (2, 3, 5, 7, 11) for n in range(61) for k in range(n + 1)
           if binomial(n, k) % p != lucas_product(n, k, p) % p
           or binomial_mod_p(n, k, p) != binomial(n, k) % p]
    return SuiteResult("Lucas theorem", not bad, "n <= 60, p in {2,3,5,7,11}"
                       if not bad else f"{len(bad)} failures", failures=bad[:10])


def suite_product_rule(max_d: int = 4) -> SuiteResult:
    bad = []
    checked = 0
    for d in range(1, max_d + 1):
        comps = strict_compositions(d)
        oracle = {}
        for lam in comps:
            for mu in comps:
                for a in plan_matrices(lam, mu):
                    oracle[a] = tensor_oracle_xi(a, d).data
        for lam in comps:
            for mu in comps:
                for nu in comps:
                    cs = plan_matrices(lam, nu)
                    for a in plan_matrices(lam, mu):
                        for b in plan_matrices(mu, nu):
                            expansion = dict(compose_basis(a, b))
                            lhs = oracle[a] @ oracle[b]
                            rhs = sum(z * oracle[c] for c, z in expansion.items())
                            if not (lhs == rhs).all():
                                bad.append(("product", a, b))
                            for c in cs:
                                checked += 1
                                if z_coefficient(a, b, c) != z_coefficient_direct(a, b, c):
                                    bad.append(("Z", a, b, c))
    return SuiteResult("Schur product rule", not bad,
                       f"d <= {max_d}, {checked} Z-coefficients against the literal count"
                       if not bad else f"{len(bad)} failures", failures=bad[:10])


def suite_relations(bound: int = 4, serre_bound: int = 3) -> SuiteResult:
    bad, total = [], 0
    for name in RELATIONS:
        for params in valid_parameters(name, serre_bound if name == "serre" else bound):
            total += 1
            if not check_relation(name, *params):
                bad.append((name, params))
    return SuiteResult("web relations", not bad,
                       f"14 relations, {total} parameter tuples" if not bad
                       else f"{len(bad)} failures", failures=bad[:10])


def suite_donkin(max_d: int = 5, max_n: int = 4) -> SuiteResult:
    bad, total = [], 0
    for d in range(1, max_d + 1):
        for lam in strict_compositions(d):
            for mu in strict_compositions(d):
                size = len(plan_matrices(lam, mu))
                for n in range(max_n + 1):
                    total += 1
                    h = hom_dim_Q(mu, lam, n)
                    if h != tableau_count(mu, lam, n) or (n >= d and h != size):
                        bad.append((mu, lam, n, h))
    return SuiteResult("Donkin surjectivity/isomorphism", not bad,
                       f"{total} cells, d <= {max_d}, n <= {max_n}" if not bad
                       else f"{len(bad)} failures", failures=bad[:10])


def words(letters: list[int], d: int) -> Iterator[tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    for x in letters:
        if x <= d:
            for w in words(letters, d - x):
                yield (x,) + w


def grid_words(p: int, max_d: int = 6) -> dict[int, list[tuple[int, ...]]]:
    letters = [p**i for i in range(max_d) if p**i <= max_d]
    return {d: list(words(letters, d)) for d in range(max_d + 1)}


def dimension_homomorphism_defects(n: int, p: int, word: tuple[int, ...]) -> list:
    """Check weyl_dim(lam) weyl_dim(mu) = sum mult * weyl_dim(nu) mod p for
    each fusion step used to decompose the word's factors."""
    from .arith import p_adic_digits

    out = []
    digits = p_adic_digits(n, p)
    for i, f in enumerate(factor_decompositions(word, n, p)[:len(digits)]):
        m = digits[i]
        if m == 0:
            continue
        one = (1,) + (0,) * (m - 1)
        for lam in f:
            prod_ = fuse(lam, one, p)
            lhs = weyl_dim(lam) * m % p
            rhs = sum(c * weyl_dim(nu) for nu, c in prod_.items()) % p
            if lhs != rhs:
                out.append((m, lam))
    return out


def suite_main_theorem(grid=MAIN_GRID, max_d: int = 6) -> SuiteResult:
    bad, total = [], 0
    for n, p in grid:
        ws = grid_words(p, max_d)
        for d in range(max_d + 1):
            for x in ws[d]:
                for y in ws[d]:
                    total += 1
                    g = gram_rank(x, y, n, p)
                    v = verlinde_hom_dim(x, y, n, p)
                    if g != v:
                        defects = dimension_homomorphism_defects(n, p, x) + \
                            dimension_homomorphism_defects(n, p, y)
                        side = "fusion rule" if defects else "trace engine"
                        bad.append(((n, p), x, y, g, v, side))
    return SuiteResult("gram rank vs Verlinde hom", not bad,
                       f"{total} pairs (X, Y) over {len(grid)} (n, p)" if not bad
                       else f"{len(bad)} mismatches, first {bad[:3]}", failures=bad)


def suite_dimension() -> SuiteResult:
    bad = []
    for p in (2, 3, 5, 7):
        for n in range(31):
            for k in range(n + 1):
                if tilt_dim_mod_p(fundamental(k, n), n, p) != binomial_mod_p(n, k, p):
                    bad.append(("varpi", n, k, p))
    cells = 0
    for n, p in MAIN_GRID:
        for ws in grid_words(p).values():
            for x in ws:
                cells += 1
                dec = tilt_decompose_word(x, n, p)
                s = sum(c * int(tilt_dim_mod_p(lam, n, p)) for lam, c in dec.items())
                if object_dim_mod_p(x, n, p) != s:
                    bad.append(("bookkeeping", n, p, x))
    return SuiteResult("dimension corollary", not bad,
                       f"varpi_k for n <= 30 and {cells} words" if not bad
                       else f"{len(bad)} failures", failures=bad[:10])


def suite_negligible() -> SuiteResult:
    bad = []
    for x, expected in (((1,), 0), ((1, 1), 0), ((2,), 1)):
        got = gram_rank(x, x, 2, 2)
        if got != expected:
            bad.append((x, got, expected))
    cases = 0
    for p in (2, 3):
        for m in range(1, 3):
            if p**m > 4:
                continue
            for a in range(1, p**m):
                for n in range(6):
                    cases += 1
                    if not gray_check(m, a, n, p):
                        bad.append(("gray", p, m, a, n))
    return SuiteResult("negligibility facts", not bad,
                       f"3 gram ranks and {cases} gray checks" if not bad
                       else f"failures {bad}", failures=bad)


def suite_identities() -> SuiteResult:
    bad = [("density", k, p) for p in (2, 3, 5, 7) for k in range(201)
           if density_scalar(k, p) != 1]
    bad += [("trinomial", m, n) for m in range(-10, 11) for n in range(11)
            if trinomial_sum(m, n) != 1]
    return SuiteResult("identity suite", not bad, "density scalar and trinomial sum"
                       if not bad else f"failures {bad[:5]}", failures=bad)


SUITES: dict[str, tuple[int, Callable[[], SuiteResult], float]] = {
    "triple": (1, suite_triple, 1.0),
    "dcoset": (2, suite_dcoset, 1.0),
    "iota": (3, suite_iota, 1.0),
    "lucas": (4, suite_lucas, 5.0),
    "product-rule": (5, suite_product_rule, 60.0),
    "relations": (6, suite_relations, 120.0),
    "donkin": (7, suite_donkin, 120.0),
    "main-theorem": (8, suite_main_theorem, 600.0),
    "dimension": (9, suite_dimension, 10.0),
    "negligible": (10, suite_negligible, 30.0),
    "identities": (11, suite_identities, 1.0),
}


def run_suite(name: str) -> SuiteResult:
    number, fn, limit = SUITES[name]
    start = time.perf_counter()
    res = fn()
    res.seconds = time.perf_counter() - start
    res.limit = limit
    res.name = f"criterion {number} ({name}) {res.name}"
    return res
