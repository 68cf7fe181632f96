"""The Schur category.

Objects are strict compositions.  Hom(mu, lam) has basis xi_A indexed by
nonnegative integer matrices A with row sums lam and column sums mu; we
call these plan matrices and store them as tuples of row tuples.
Composition follows Schur's product rule

    xi_A o xi_B = sum_C Z(A, B, C) xi_C,

where Z is computed by summing over 3-tensors T with T[x][y][z] counting
positions whose (target, middle, source) labels are (x, y, z).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .weights import Tableau, index_tuples, orbit_type, ssyt_enumerate, partitions

PlanMatrix = tuple[tuple[int, ...], ...]


class SchurError(ValueError):
    pass


# ---------------------------------------------------------------- plan matrices

def plan(rows: Iterable[Iterable[int]]) -> PlanMatrix:
    return tuple(tuple(int(x) for x in r) for r in rows)


def row_sums(a: PlanMatrix) -> tuple[int, ...]:
    return tuple(sum(r) for r in a)


def col_sums(a: PlanMatrix, ncols: int | None = None) -> tuple[int, ...]:
    if ncols is None:
        ncols = len(a[0]) if a else 0
    return tuple(sum(r[j] for r in a) for j in range(ncols))


def transpose_plan(a: PlanMatrix, ncols: int | None = None) -> PlanMatrix:
    if ncols is None:
        ncols = len(a[0]) if a else 0
    return tuple(tuple(r[j] for r in a) for j in range(ncols))


def parse_matrix(text: str) -> PlanMatrix:
    """Parse "1,0,3;2,2,1"."""
    text = text.strip()
    if not text:
        return ()
    rows = [r.strip() for r in text.split(";")]
    m = plan([int(x) for x in r.split(",")] for r in rows)
    if len({len(r) for r in m}) > 1:
        raise SchurError(f"ragged matrix {text!r}")
    if any(x < 0 for r in m for x in r):
        raise SchurError("plan matrices have nonnegative entries")
    return m


def format_matrix(a: PlanMatrix) -> str:
    return ";".join(",".join(str(x) for x in r) for r in a)


@lru_cache(maxsize=None)
def contingency_tables(rows: tuple[int, ...], cols: tuple[int, ...]) -> tuple[PlanMatrix, ...]:
    """All nonnegative integer matrices with the given margins."""
    if sum(rows) != sum(cols):
        return ()
    if not rows:
        return ((),) if not any(cols) else ()
    out = []
    first, rest = rows[0], rows[1:]

    def fill(j: int, left: int, acc: list[int]):
        if j == len(cols) - 1:
            if left <= cols[j]:
                yield tuple(acc + [left])
            return
        for x in range(min(left, cols[j]), -1, -1):
            acc.append(x)
            yield from fill(j + 1, left - x, acc)
            acc.pop()

    if not cols:
        return (((),) * len(rows),) if not any(rows) else ()
    for r in fill(0, first, []):
        remaining = tuple(c - x for c, x in zip(cols, r))
        for tail in contingency_tables(rest, remaining):
            out.append((r,) + tail)
    return tuple(out)


def plan_matrices(lam: Sequence[int], mu: Sequence[int]) -> tuple[PlanMatrix, ...]:
    """Mat_{lam, mu}: row sums lam, column sums mu."""
    lam, mu = tuple(lam), tuple(mu)
    if not lam and not mu:
        return ((),)
    if not lam or not mu:
        return ()
    return contingency_tables(lam, mu)


def diag_plan(lam: Sequence[int]) -> PlanMatrix:
    n = len(lam)
    return tuple(tuple(lam[i] if i == j else 0 for j in range(n)) for i in range(n))


def block_diag(a: PlanMatrix, b: PlanMatrix, a_cols: int, b_cols: int) -> PlanMatrix:
    top = tuple(r + (0,) * b_cols for r in a)
    bottom = tuple((0,) * a_cols + r for r in b)
    return top + bottom


# ----------------------------------------------------------- product rule

@lru_cache(maxsize=200_000)
def compose_basis(a: PlanMatrix, b: PlanMatrix) -> tuple[tuple[PlanMatrix, int], ...]:
    """Expansion of xi_a o xi_b as ((C, Z(a, b, C)), ...), sorted by C.

    a is lam x mu and b is mu x nu.  For each middle index y we choose the
    slice T[., y, .], a table with margins (column y of a, row y of b), and
    accumulate C = sum_y T_y.  Adding slices one at a time, the multinomial
    prod_{x,z} c_xz! / prod_y T_xyz! factors as a product of binomials
    binom(partial_xz + T_xyz, T_xyz), so the dynamic programme stays in
    the integers.
    """
    nrows = len(a)
    nmid = len(b)
    ncols = len(b[0]) if b else 0
    if a and len(a[0]) != nmid:
        raise SchurError("middle objects do not match")
    if col_sums(a, nmid) != row_sums(b):
        raise SchurError("middle objects do not match")
    # partial sums are kept flattened; each slice only touches its nonzero cells
    states: dict[tuple[int, ...], int] = {(0,) * (nrows * ncols): 1}
    for y in range(nmid):
        col = tuple(a[x][y] for x in range(nrows))
        slices = _sparse_slices(col, b[y])
        nxt: dict[tuple[int, ...], int] = {}
        for partial, coeff in states.items():
            for cells in slices:
                new = list(partial)
                c = coeff
                for idx, tv in cells:
                    v = new[idx] + tv
                    c *= comb(v, tv)
                    new[idx] = v
                key = tuple(new)
                nxt[key] = nxt.get(key, 0) + c
        states = nxt
    out = []
    for flat, coeff in states.items():
        out.append((tuple(flat[x * ncols:(x + 1) * ncols] for x in range(nrows)), coeff))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _sparse_slices(col: tuple[int, ...], row: tuple[int, ...]) -> tuple[tuple[tuple[int, int], ...], ...]:
    ncols = len(row)
    return tuple(tuple((x * ncols + z, v) for x, r in enumerate(t) for z, v in enumerate(r) if v)
                 for t in contingency_tables(col, row))


def z_coefficient(a: PlanMatrix, b: PlanMatrix, c: PlanMatrix) -> int:
    """Z(A, B, C) from the contingency-tensor formula."""
    _check_margins(a, b, c)
    return dict(compose_basis(a, b)).get(c, 0)


def _check_margins(a: PlanMatrix, b: PlanMatrix, c: PlanMatrix) -> None:
    nmid = len(b)
    ncols = len(b[0]) if b else 0
    if len(a) != len(c) or (a and len(a[0]) != nmid) or (c and len(c[0]) != ncols):
        raise SchurError("matrix shapes are incompatible")
    if row_sums(a) != row_sums(c):
        raise SchurError("targets of A and C differ")
    if col_sums(b, ncols) != col_sums(c, ncols):
        raise SchurError("sources of B and C differ")
    if col_sums(a, nmid) != row_sums(b):
        raise SchurError("source of A is not the target of B")


def z_coefficient_direct(a: PlanMatrix, b: PlanMatrix, c: PlanMatrix) -> int:
    """Literal count #{j : (i, j) in Pi_A, (j, k) in Pi_B} for the row-reading
    choice of (i, k) in Pi_C.  Exponential; for checking small cases."""
    _check_margins(a, b, c)
    i, k = [], []
    for x, r in enumerate(c):
        for z, v in enumerate(r):
            i += [x + 1] * v
            k += [z + 1] * v
    mid = row_sums(b)
    count = 0
    for j in index_tuples(mid):
        if (orbit_type(i, j, len(a), len(mid)) == a
                and orbit_type(j, k, len(mid), len(c[0]) if c else 0) == b):
            count += 1
    return count


# -------------------------------------------------------------- morphisms

@dataclass(frozen=True)
class SchurMorphism:
    """A Z-linear combination of basis morphisms xi_A : source -> target."""

    source: tuple[int, ...]
    target: tuple[int, ...]
    terms: Mapping[PlanMatrix, int] = field(default_factory=dict)

    def __post_init__(self):
        if sum(self.source) != sum(self.target):
            raise SchurError(f"degrees differ: {self.source} -> {self.target}")
        if any(a <= 0 for a in self.source + self.target):
            raise SchurError("objects must be strict compositions")
        clean = {}
        for m, c in self.terms.items():
            if c:
                if row_sums(m) != self.target or col_sums(m, len(self.source)) != self.source:
                    raise SchurError(f"{m} is not in Mat_{self.target},{self.source}")
                clean[m] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def basis(cls, a: PlanMatrix, source: Sequence[int] | None = None,
              coeff: int = 1) -> "SchurMorphism":
        a = plan(a)
        src = tuple(source) if source is not None else col_sums(a)
        return cls(src, row_sums(a), {a: coeff})

    @classmethod
    def identity(cls, lam: Sequence[int]) -> "SchurMorphism":
        lam = tuple(lam)
        return cls(lam, lam, {diag_plan(lam): 1})

    @classmethod
    def zero(cls, source: Sequence[int], target: Sequence[int]) -> "SchurMorphism":
        return cls(tuple(source), tuple(target), {})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[PlanMatrix, int]]:
        return sorted(self.terms.items())

    def _same_hom(self, other: "SchurMorphism") -> None:
        if (self.source, self.target) != (other.source, other.target):
            raise SchurError("morphisms live in different hom spaces")

    def __add__(self, other: "SchurMorphism") -> "SchurMorphism":
        self._same_hom(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SchurMorphism(self.source, self.target, out)

    def __neg__(self) -> "SchurMorphism":
        return SchurMorphism(self.source, self.target, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SchurMorphism") -> "SchurMorphism":
        return self + (-other)

    def __rmul__(self, k: int) -> "SchurMorphism":
        return SchurMorphism(self.source, self.target, {m: k * c for m, c in self.terms.items()})

    def __matmul__(self, other: "SchurMorphism") -> "SchurMorphism":
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, SchurMorphism):
            return NotImplemented
        return (self.source, self.target) == (other.source, other.target) and \
            dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.source, self.target, tuple(self.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*xi[{format_matrix(m)}]" for m, c in self.items()) or "0"
        return f"SchurMorphism({self.source} -> {self.target}: {body})"


def compose(f: SchurMorphism, g: SchurMorphism) -> SchurMorphism:
    """f o g (apply g first)."""
    if f.source != g.target:
        raise SchurError(f"cannot compose: source {f.source} != target {g.target}")
    out: dict[PlanMatrix, int] = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            for c, z in compose_basis(a, b):
                out[c] = out.get(c, 0) + ca * cb * z
    return SchurMorphism(g.source, f.target, out)


def tensor(f: SchurMorphism, g: SchurMorphism) -> SchurMorphism:
    out: dict[PlanMatrix, int] = {}
    fc, gc = len(f.source), len(g.source)
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            m = block_diag(a, b, fc, gc)
            out[m] = out.get(m, 0) + ca * cb
    return SchurMorphism(f.source + g.source, f.target + g.target, out)


# ---------------------------------------------------------- generators

def merge_plan(parts: Sequence[int]) -> PlanMatrix:
    """The n-fold merge (a_1 ... a_k) -> (a_1 + ... + a_k)."""
    return (tuple(parts),)


def split_plan(parts: Sequence[int]) -> PlanMatrix:
    return tuple((a,) for a in parts)


def perm_plan(parts: Sequence[int], g: Sequence[int]) -> PlanMatrix:
    """Generalized permutation g 1_mu with mu = parts, g in one-line notation
    (1-based).  The entry in row g(i), column i is mu_i."""
    n = len(parts)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[g[i] - 1][i] = parts[i]
    return plan(rows)


def permute_composition(parts: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """Target of g 1_mu: entry g(i) of the result is mu_i."""
    out = [0] * len(parts)
    for i, a in enumerate(parts):
        out[g[i] - 1] = a
    return tuple(out)


def compose_perms(g: Sequence[int], h: Sequence[int]) -> tuple[int, ...]:
    """(g h)(i) = g(h(i))."""
    return tuple(g[h[i] - 1] for i in range(len(h)))


def inverse_perm(g: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x - 1] = i + 1
    return tuple(out)


def perm_to_cycles(g: Sequence[int]) -> str:
    """Cycle notation with fixed points omitted; the identity is "()"."""
    seen = set()
    cycles = []
    for start in range(1, len(g) + 1):
        if start in seen or g[start - 1] == start:
            seen.add(start)
            continue
        cyc = [start]
        seen.add(start)
        x = g[start - 1]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = g[x - 1]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def cycles_to_perm(text: str, n: int) -> tuple[int, ...]:
    g = list(range(1, n + 1))
    for chunk in text.replace(")", "").split("("):
        chunk = chunk.strip()
        if not chunk:
            continue
        cyc = [int(x) for x in chunk.split()]
        for i, x in enumerate(cyc):
            g[x - 1] = cyc[(i + 1) % len(cyc)]
    return tuple(g)


def inversions(g: Sequence[int]) -> int:
    n = len(g)
    return sum(1 for i in range(n) for j in range(i + 1, n) if g[i] > g[j])


# ---------------------------------------------------- triple decomposition

@dataclass(frozen=True)
class TripleDecomposition:
    A_minus: PlanMatrix
    perm: tuple[int, ...]
    mu_plus: tuple[int, ...]
    A_plus: PlanMatrix
    lambda_minus: tuple[int, ...]
    A_zero: PlanMatrix

    def morphisms(self) -> tuple[SchurMorphism, SchurMorphism, SchurMorphism]:
        return (SchurMorphism.basis(self.A_minus),
                SchurMorphism.basis(self.A_zero),
                SchurMorphism.basis(self.A_plus))

    def recompose(self) -> SchurMorphism:
        m, z, p = self.morphisms()
        return compose(m, compose(z, p))


def nonzero_row_reading(a: PlanMatrix) -> list[tuple[int, int, int]]:
    """(row, col, value) of the nonzero entries, row by row."""
    return [(i, j, v) for i, r in enumerate(a) for j, v in enumerate(r) if v]


def nonzero_col_reading(a: PlanMatrix) -> list[tuple[int, int, int]]:
    ncols = len(a[0]) if a else 0
    return [(i, j, a[i][j]) for j in range(ncols) for i in range(len(a)) if a[i][j]]


def triple_decompose(a: PlanMatrix) -> TripleDecomposition:
    """Factor xi_A = xi_{A-} o xi_{A0} o xi_{A+}: split each source strand
    into its nonzero column entries, permute from column reading to row
    reading, then merge each row."""
    a = plan(a)
    ncols = len(a[0]) if a else 0
    if any(sum(r) == 0 for r in a) or any(s == 0 for s in col_sums(a, ncols)):
        raise SchurError("plan matrix has a zero row or column")
    rr = nonzero_row_reading(a)
    cr = nonzero_col_reading(a)
    n = len(rr)
    lam_minus = tuple(v for _, _, v in rr)
    mu_plus = tuple(v for _, _, v in cr)
    pos_in_rows = {(i, j): k for k, (i, j, _) in enumerate(rr)}
    g = tuple(pos_in_rows[(i, j)] + 1 for (i, j, _) in cr)

    a_minus = []
    k = 0
    for r in a:
        row = [0] * n
        for v in r:
            if v:
                row[k] = v
                k += 1
        a_minus.append(tuple(row))
    a_plus = [[0] * ncols for _ in range(n)]
    for k, (_, j, v) in enumerate(cr):
        a_plus[k][j] = v
    return TripleDecomposition(
        A_minus=tuple(a_minus),
        perm=g,
        mu_plus=mu_plus,
        A_plus=plan(a_plus),
        lambda_minus=lam_minus,
        A_zero=perm_plan(mu_plus, g),
    )


def double_coset_perm(a: PlanMatrix) -> tuple[int, ...]:
    """The permutation d_A in one-line notation.

    Unit positions 1..d at the bottom are grouped by the column-reading
    blocks of A, those at the top by the row-reading blocks; d_A sends each
    bottom position to the top position of the same unit, preserving order
    inside each block.  Zero entries contribute empty blocks.
    """
    a = plan(a)
    rr = nonzero_row_reading(a)
    cr = nonzero_col_reading(a)
    top_start = {}
    pos = 1
    for i, j, v in rr:
        top_start[(i, j)] = pos
        pos += v
    out = []
    for i, j, v in cr:
        out.extend(range(top_start[(i, j)], top_start[(i, j)] + v))
    return tuple(out)


# ---------------------------------------------------------- codeterminants

def codeterminant_plans(p: Tableau, q: Tableau, lam_len: int,
                        mu_len: int) -> tuple[PlanMatrix, PlanMatrix]:
    """A in Mat_{lam, kappa} and B in Mat_{kappa, mu} defining gamma_{P,Q}."""
    if p.shape != q.shape:
        raise SchurError("tableaux have different shapes")
    a = tuple(tuple(p.rows[j].count(i) for j in range(len(p.rows)))
              for i in range(1, lam_len + 1))
    b = tuple(tuple(q.rows[i].count(j) for j in range(1, mu_len + 1))
              for i in range(len(q.rows)))
    return a, b


def codeterminant(p: Tableau, q: Tableau, lam: Sequence[int],
                  mu: Sequence[int]) -> SchurMorphism:
    """gamma_{P,Q} = xi_A o xi_B : mu -> lam."""
    lam, mu = tuple(lam), tuple(mu)
    a, b = codeterminant_plans(p, q, len(lam), len(mu))
    if row_sums(a) != lam or col_sums(b, len(mu)) != mu:
        raise SchurError("tableau contents do not match the objects")
    kappa = p.shape
    return compose(SchurMorphism(kappa, lam, {a: 1}), SchurMorphism(mu, kappa, {b: 1}))


def codeterminant_basis(lam: Sequence[int], mu: Sequence[int]) -> list[tuple[Tableau, Tableau, SchurMorphism]]:
    lam, mu = tuple(lam), tuple(mu)
    d = sum(lam)
    out = []
    for kappa in partitions(d):
        ps = ssyt_enumerate(lam, kappa)
        if not ps:
            continue
        qs = ssyt_enumerate(mu, kappa)
        for p, q in product(ps, qs):
            out.append((p, q, codeterminant(p, q, lam, mu)))
    return out


def all_perms(n: int) -> list[tuple[int, ...]]:
    return [tuple(g) for g in permutations(range(1, n + 1))]
