"""Compositions, partitions, dominant weights and semistandard tableaux."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

Composition = tuple[int, ...]
Partition = tuple[int, ...]


def parse_weight(text: str) -> tuple[int, ...]:
    """Parse "4,2,1" (spaces allowed, empty string is the empty tuple)."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.replace(" ", "").split(","))


def format_weight(w: Sequence[int]) -> str:
    return ",".join(str(x) for x in w)


def is_dominant(v: Sequence[int]) -> bool:
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


def dominant_sort(v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(v, reverse=True))


def strict(parts: Sequence[int]) -> Composition:
    """Drop zero parts."""
    return tuple(a for a in parts if a)


def is_strict_composition(parts: Sequence[int]) -> bool:
    return all(isinstance(a, int) and a > 0 for a in parts)


def trim(lam: Sequence[int]) -> Partition:
    lam = list(lam)
    while lam and lam[-1] == 0:
        lam.pop()
    return tuple(lam)


def transpose(lam: Sequence[int]) -> Partition:
    """Conjugate partition.

    >>> transpose((4, 2, 1))
    (3, 2, 1, 1)
    """
    lam = trim(lam)
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a > j) for j in range(lam[0]))


@lru_cache(maxsize=None)
def partitions(d: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of d in reverse lexicographic order."""
    if max_part is None:
        max_part = d
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def strict_compositions(d: int) -> tuple[Composition, ...]:
    if d == 0:
        return ((),)
    out = []
    for first in range(1, d + 1):
        for rest in strict_compositions(d - first):
            out.append((first,) + rest)
    return tuple(out)


def compositions(d: int, length: int) -> Iterator[Composition]:
    """Weak compositions of d with exactly `length` parts."""
    if length == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in compositions(d - first, length - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram; rows are listed top to bottom."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def content(self, length: int | None = None) -> Composition:
        entries = [x for r in self.rows for x in r]
        top = max(entries, default=0) if length is None else length
        return tuple(entries.count(i) for i in range(1, top + 1))

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def is_semistandard(self) -> bool:
        for r in self.rows:
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                return False
        for i in range(len(self.rows) - 1):
            upper, lower = self.rows[i], self.rows[i + 1]
            if len(lower) > len(upper):
                return False
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True


def horizontal_strips(outer_bound: Partition, inner: Partition, size: int,
                      max_rows: int | None = None) -> Iterator[Partition]:
    """Partitions nu containing `inner` with nu/inner a horizontal strip of `size` boxes.

    If outer_bound is nonempty, nu must fit inside it.
    """
    rows = len(inner) + 1
    if max_rows is not None:
        rows = min(rows, max_rows)
    inner = tuple(inner) + (0,) * max(0, rows - len(inner))

    def rec(i: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                yield trim(acc)
            return
        cap = left
        if i > 0:
            cap = min(cap, inner[i - 1] - inner[i])
        if outer_bound:
            bound = outer_bound[i] if i < len(outer_bound) else 0
            cap = min(cap, bound - inner[i])
        for add in range(cap, -1, -1):
            acc.append(inner[i] + add)
            yield from rec(i + 1, left - add, acc)
            acc.pop()

    yield from rec(0, size, [])


def ssyt_enumerate(content: Sequence[int], shape: Sequence[int]) -> list[Tableau]:
    """All semistandard tableaux (rows weakly increasing, columns strictly
    increasing) of the given shape and content, sorted by reading word."""
    content = tuple(content)
    shape = trim(shape)
    if sum(content) != sum(shape):
        raise ValueError(f"size mismatch: |{content}| != |{shape}|")
    out: list[Tableau] = []

    def rec(letter: int, current: Partition, chain: list[Partition]):
        if letter == len(content):
            if current == shape:
                out.append(_chain_to_tableau(chain))
            return
        for nxt in horizontal_strips(shape, current, content[letter]):
            chain.append(nxt)
            rec(letter + 1, nxt, chain)
            chain.pop()

    rec(0, (), [()])
    out.sort(key=lambda t: t.reading_word())
    return out


def _chain_to_tableau(chain: list[Partition]) -> Tableau:
    final = chain[-1]
    rows = [[0] * a for a in final]
    for letter in range(1, len(chain)):
        prev, cur = chain[letter - 1], chain[letter]
        for i, a in enumerate(cur):
            start = prev[i] if i < len(prev) else 0
            for j in range(start, a):
                rows[i][j] = letter
    return Tableau(tuple(tuple(r) for r in rows))


@lru_cache(maxsize=None)
def ssyt_count(content: tuple[int, ...], shape: tuple[int, ...]) -> int:
    """Kostka number |Std(content, shape)|, by counting strip chains."""
    content = tuple(content)
    shape = trim(shape)
    if sum(content) != sum(shape):
        raise ValueError(f"size mismatch: |{content}| != |{shape}|")
    layer = {(): 1}
    for c in content:
        nxt: dict[Partition, int] = {}
        for cur, mult in layer.items():
            for p in horizontal_strips(shape, cur, c):
                nxt[p] = nxt.get(p, 0) + mult
        layer = nxt
    return layer.get(shape, 0)


def index_tuples(lam: Sequence[int]) -> list[tuple[int, ...]]:
    """I_lambda: all tuples with lam_i entries equal to i, sorted."""
    base = tuple(i + 1 for i, a in enumerate(lam) for _ in range(a))
    return sorted(set(permutations(base)))


def orbit_type(i: Sequence[int], j: Sequence[int], rows: int | None = None,
               cols: int | None = None) -> tuple[tuple[int, ...], ...]:
    """The matrix A with (i, j) in Pi_A: a[x][y] = #{r : (i_r, j_r) = (x, y)}."""
    if len(i) != len(j):
        raise ValueError("tuples of different length")
    rows = max(i, default=0) if rows is None else rows
    cols = max(j, default=0) if cols is None else cols
    a = [[0] * cols for _ in range(rows)]
    for x, y in zip(i, j):
        a[x - 1][y - 1] += 1
    return tuple(tuple(r) for r in a)


def weight_of(subsets: Sequence[Sequence[int]], n: int) -> tuple[int, ...]:
    """Content (weight) of a tuple of subsets of {1..n}."""
    w = [0] * n
    for s in subsets:
        for x in s:
            w[x - 1] += 1
    return tuple(w)
