"""String-diagram words for the web category and their evaluation in the
Schur category.

A word is a bottom object (strand thicknesses) followed by layers, each a
two-fold merge, a two-fold split or a crossing of adjacent strands.
Evaluation sends merge, split and crossing to xi_(a b), xi_(a;b) and the
antidiagonal plan [[0, b], [a, 0]], tensored with identities, and composes
layers bottom to top.  The resulting xi-expansion is the straightened
normal form of the word.

The second half of the module encodes the defining relations (and the
ones derived in the appendix) as lists of diagrams built with
:class:`Diagram`, a builder that tolerates strands of thickness zero so
that summation formulas can be written without special cases.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator, Sequence

from .arith import binomial
from .schur import (PlanMatrix, SchurMorphism, TripleDecomposition, compose,
                    format_matrix, plan, tensor, triple_decompose)


class WebError(ValueError):
    pass


class WebSyntaxError(WebError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class WebGenerator:
    kind: str        # "merge", "split" or "cross"
    pos: int         # 1-based index of the left strand involved
    a: int = 0       # split parameters
    b: int = 0

    def apply(self, obj: tuple[int, ...]) -> tuple[int, ...]:
        """Object above this generator, or WebError if it does not fit."""
        i = self.pos - 1
        if self.kind == "split":
            if not 0 <= i < len(obj):
                raise WebError(f"strand {self.pos} out of range for object {obj}")
            if self.a <= 0 or self.b <= 0:
                raise WebError("split thicknesses must be positive")
            if self.a + self.b != obj[i]:
                raise WebError(f"split {self.a}+{self.b} does not match thickness {obj[i]}")
            return obj[:i] + (self.a, self.b) + obj[i + 1:]
        if not 0 <= i < len(obj) - 1:
            raise WebError(f"strands {self.pos},{self.pos + 1} out of range for object {obj}")
        if self.kind == "merge":
            return obj[:i] + (obj[i] + obj[i + 1],) + obj[i + 2:]
        if self.kind == "cross":
            return obj[:i] + (obj[i + 1], obj[i]) + obj[i + 2:]
        raise WebError(f"unknown generator {self.kind!r}")

    def core_plan(self, obj: tuple[int, ...]) -> PlanMatrix:
        i = self.pos - 1
        if self.kind == "merge":
            return ((obj[i], obj[i + 1]),)
        if self.kind == "split":
            return ((self.a,), (self.b,))
        return ((0, obj[i + 1]), (obj[i], 0))

    def layer(self, obj: tuple[int, ...]) -> SchurMorphism:
        """identity (x) generator (x) identity on the object below."""
        i = self.pos - 1
        width = 1 if self.kind == "split" else 2
        left = SchurMorphism.identity(obj[:i])
        right = SchurMorphism.identity(obj[i + width:])
        core = self.core_plan(obj)
        mid = SchurMorphism(obj[i:i + width], self.apply(obj)[i:i + len(core)], {core: 1})
        return tensor(tensor(left, mid), right)

    def __str__(self):
        if self.kind == "split":
            return f"split {self.pos} {self.a} {self.b}"
        return f"{self.kind} {self.pos}"


@dataclass(frozen=True)
class WebWord:
    bottom: tuple[int, ...]
    layers: tuple[WebGenerator, ...] = ()

    def __post_init__(self):
        if any(t <= 0 for t in self.bottom):
            raise WebError("strand thicknesses must be positive")
        self.objects()

    def objects(self) -> list[tuple[int, ...]]:
        objs = [tuple(self.bottom)]
        for g in self.layers:
            objs.append(g.apply(objs[-1]))
        return objs

    @property
    def top(self) -> tuple[int, ...]:
        return self.objects()[-1]

    def then(self, other: "WebWord") -> "WebWord":
        """Stack `other` on top of this word."""
        if other.bottom != self.top:
            raise WebError(f"cannot stack: {self.top} != {other.bottom}")
        return WebWord(self.bottom, self.layers + other.layers)

    def beside(self, other: "WebWord") -> "WebWord":
        """Side-by-side juxtaposition: self's layers first, then other's."""
        shift = len(self.top)
        moved = tuple(WebGenerator(g.kind, g.pos + shift, g.a, g.b) for g in other.layers)
        return WebWord(self.bottom + other.bottom, self.layers + moved)

    def to_text(self) -> str:
        lines = ["obj " + " ".join(map(str, self.bottom))]
        lines += [str(g) for g in self.layers]
        return "\n".join(lines)


# ------------------------------------------------------------------ parsing

def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise WebSyntaxError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse(text: str) -> WebWord:
    """Parse the line-oriented DSL.

    ``obj t1 ... tk`` gives the bottom object, then one generator per line:
    ``merge i``, ``split i a b`` and ``cross i``.  ``merge i k`` merges k
    adjacent strands and ``split i a1 ... ak`` splits into k parts, both
    expanding to left-nested two-fold generators.  '/' also separates
    lines and '#' starts a comment.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        for chunk in raw.split("#", 1)[0].split("/"):
            if chunk.strip():
                lines.append((lineno, chunk.split()))
    if not lines:
        raise WebSyntaxError(1, "empty program")
    lineno, toks = lines[0]
    if toks[0] != "obj":
        raise WebSyntaxError(lineno, "program must start with 'obj'")
    bottom = tuple(_ints(toks[1:], lineno))
    if any(t <= 0 for t in bottom):
        raise WebSyntaxError(lineno, "thicknesses must be positive")
    obj = bottom
    layers: list[WebGenerator] = []
    for lineno, toks in lines[1:]:
        op, args = toks[0], _ints(toks[1:], lineno)
        if op == "merge":
            if len(args) not in (1, 2):
                raise WebSyntaxError(lineno, "usage: merge i [k]")
            count = args[1] if len(args) == 2 else 2
            if count < 2:
                raise WebSyntaxError(lineno, "a merge needs at least two strands")
            new = [WebGenerator("merge", args[0])] * (count - 1)
        elif op == "split":
            if len(args) < 3:
                raise WebSyntaxError(lineno, "usage: split i a b [c ...]")
            pos, parts = args[0], args[1:]
            new = []
            for k in range(len(parts) - 1, 0, -1):
                new.append(WebGenerator("split", pos, sum(parts[:k]), parts[k]))
        elif op == "cross":
            if len(args) != 1:
                raise WebSyntaxError(lineno, "usage: cross i")
            new = [WebGenerator("cross", args[0])]
        elif op == "obj":
            raise WebSyntaxError(lineno, "'obj' may only appear once, first")
        else:
            raise WebSyntaxError(lineno, f"unknown operation {op!r}")
        for g in new:
            try:
                obj = g.apply(obj)
            except WebError as e:
                raise WebSyntaxError(lineno, str(e)) from None
            layers.append(g)
    return WebWord(bottom, tuple(layers))


# --------------------------------------------------------------- evaluation

def evaluate(w: WebWord) -> SchurMorphism:
    objs = w.objects()
    out = SchurMorphism.identity(w.bottom)
    for g, obj in zip(w.layers, objs):
        out = compose(g.layer(obj), out)
    return out


def normalize(w: WebWord) -> list[tuple[PlanMatrix, int]]:
    """The xi-basis expansion of w, sorted by plan matrix."""
    return evaluate(w).items()


def format_normal_form(terms: list[tuple[PlanMatrix, int]]) -> str:
    return "\n".join(f"{c}  {format_matrix(m)}" for m, c in terms)


def chicken_foot_word(a: PlanMatrix) -> WebWord:
    """A reduced chicken foot diagram of type A: splits, then crossings
    (a reduced word sorting column reading into row reading), then merges."""
    t = triple_decompose(plan(a))
    return _word_from_triple(t, tuple(sum(r[j] for r in t.A_plus) for j in range(len(t.A_plus[0]))))


def _word_from_triple(t: TripleDecomposition, mu: tuple[int, ...]) -> WebWord:
    layers: list[WebGenerator] = []
    # splits, column by column, left nested
    pos = 1
    idx = 0
    for j, width in enumerate(mu):
        parts = []
        while idx < len(t.A_plus) and t.A_plus[idx][j]:
            parts.append(t.A_plus[idx][j])
            idx += 1
        for k in range(len(parts) - 1, 0, -1):
            layers.append(WebGenerator("split", pos, sum(parts[:k]), parts[k]))
        pos += len(parts)
    # crossings: bubble sort the row-reading labels
    labels = list(t.perm)
    changed = True
    while changed:
        changed = False
        for k in range(len(labels) - 1):
            if labels[k] > labels[k + 1]:
                labels[k], labels[k + 1] = labels[k + 1], labels[k]
                layers.append(WebGenerator("cross", k + 1))
                changed = True
    # merges, row by row
    pos = 1
    for row in t.A_minus:
        count = sum(1 for v in row if v)
        layers.extend([WebGenerator("merge", pos)] * (count - 1))
        pos += 1
    return WebWord(mu, tuple(layers))


# ------------------------------------------------------- diagram builder

class Diagram:
    """Builds web words while allowing thickness-zero strands.

    A zero strand stands for no strand at all: merging or crossing with it
    is the identity and splitting off a zero part does nothing.  Asking to
    split off a negative part makes the whole diagram zero.
    """

    def __init__(self, bottom: Sequence[int]):
        self.bottom = tuple(bottom)
        self.obj = list(bottom)
        self.ops: list[tuple] = []
        self.objects = [tuple(bottom)]
        self.dead = any(t < 0 for t in bottom)

    def _real_index(self, i: int) -> int:
        return sum(1 for t in self.obj[:i] if t > 0) + 1

    def _record(self, op: tuple):
        self.ops.append(op)
        self.objects.append(tuple(self.obj))
        return self

    def merge(self, i: int) -> "Diagram":
        i -= 1
        x, y = self.obj[i], self.obj[i + 1]
        real = self._real_index(i)
        self.obj[i:i + 2] = [x + y]
        return self._record(("merge", i + 1, real, x, y))

    def split(self, i: int, a: int, b: int) -> "Diagram":
        i -= 1
        if a < 0 or b < 0 or a + b != self.obj[i]:
            if a + b != self.obj[i]:
                raise WebError(f"split {a}+{b} of strand of thickness {self.obj[i]}")
            self.dead = True
        real = self._real_index(i)
        self.obj[i:i + 1] = [a, b]
        return self._record(("split", i + 1, real, a, b))

    def cross(self, i: int) -> "Diagram":
        i -= 1
        x, y = self.obj[i], self.obj[i + 1]
        real = self._real_index(i)
        self.obj[i], self.obj[i + 1] = y, x
        return self._record(("cross", i + 1, real, x, y))

    def move_right(self, i: int, k: int) -> "Diagram":
        """Move k units from strand i to strand i+1 (split, then merge)."""
        self.split(i, self.obj[i - 1] - k, k)
        return self.merge(i + 1)

    def move_left(self, i: int, k: int) -> "Diagram":
        """Move k units from strand i+1 to strand i."""
        self.split(i + 1, k, self.obj[i] - k)
        return self.merge(i)

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(self.obj)

    def word(self) -> WebWord | None:
        if self.dead:
            return None
        layers = []
        for kind, _, real, x, y in self.ops:
            if x == 0 or y == 0:
                continue
            if kind == "split":
                layers.append(WebGenerator("split", real, x, y))
            else:
                layers.append(WebGenerator(kind, real))
        return WebWord(tuple(t for t in self.bottom if t > 0), tuple(layers))

    def mirror(self) -> "Diagram":
        """Reflect left to right."""
        out = Diagram(self.bottom[::-1])
        for (kind, pos, _, x, y), obj in zip(self.ops, self.objects):
            k = len(obj)
            if kind == "split":
                out.split(k + 1 - pos, y, x)
            elif kind == "merge":
                out.merge(k - pos)
            else:
                out.cross(k - pos)
        out.dead = out.dead or self.dead
        return out

    def flip(self) -> "Diagram":
        """Reflect top to bottom (reverse the layers, swapping merge and split)."""
        out = Diagram(self.top)
        for (kind, pos, _, x, y), obj in reversed(list(zip(self.ops, self.objects))):
            if kind == "split":
                out.merge(pos)
            elif kind == "merge":
                out.split(pos, x, y)
            else:
                out.cross(pos)
        out.dead = out.dead or self.dead
        return out


LinearDiagram = list[tuple[int, Diagram]]


def evaluate_sum(terms: LinearDiagram, source: Sequence[int],
                 target: Sequence[int]) -> SchurMorphism:
    src = tuple(t for t in source if t > 0)
    tgt = tuple(t for t in target if t > 0)
    out = SchurMorphism.zero(src, tgt)
    for coeff, dia in terms:
        w = dia.word()
        if w is None or coeff == 0:
            continue
        f = evaluate(w)
        if (f.source, f.target) != (src, tgt):
            raise WebError(f"term has type {f.source}->{f.target}, expected {src}->{tgt}")
        out = out + coeff * f
    return out


# ---------------------------------------------------------------- relations

Equation = list[LinearDiagram]   # all sides must agree


def _single(d: Diagram) -> LinearDiagram:
    return [(1, d)]


def _mirror_eq(eq: Equation) -> Equation:
    return [[(c, d.mirror()) for c, d in side] for side in eq]


def _flip_eq(eq: Equation) -> Equation:
    return [[(c, d.flip()) for c, d in side] for side in eq]


def rel_assrel(a: int, b: int, c: int) -> list[Equation]:
    merges = [_single(Diagram((a, b, c)).merge(1).merge(1)),
              _single(Diagram((a, b, c)).merge(2).merge(1))]
    splits = [_single(Diagram((a + b + c,)).split(1, a + b, c).split(1, a, b)),
              _single(Diagram((a + b + c,)).split(1, a, b + c).split(2, b, c))]
    return [merges, splits]


def rel_trivial(a: int, b: int) -> list[Equation]:
    lhs = _single(Diagram((a + b,)).split(1, a, b).merge(1))
    rhs = [(binomial(a + b, a), Diagram((a + b,)))]
    return [[lhs, rhs]]


def _mergesplit_term(a: int, c: int, s: int, t: int) -> Diagram:
    return (Diagram((a, c)).split(1, s, a - s).split(3, c - t, t)
            .cross(2).merge(1).merge(2))


def rel_mergesplit(a: int, b: int, c: int, d: int) -> list[Equation]:
    if a + c != b + d:
        raise WebError("mergesplit needs d - a = c - b")
    lhs = _single(Diagram((a, c)).merge(1).split(1, b, d))
    rhs = [(1, _mergesplit_term(a, c, s, t))
           for s in range(min(a, b) + 1) for t in range(min(c, d) + 1)
           if t - s == d - a]
    return [[lhs, rhs]]


def _square_range(b: int, c: int, d: int) -> range:
    return range(max(0, c - b), min(c, d) + 1)


def _jonsquare_sides(a: int, b: int, c: int, d: int) -> tuple[LinearDiagram, LinearDiagram, LinearDiagram]:
    if not (0 <= d <= a and 0 <= c <= b + d):
        raise WebError("needs d <= a and c <= b + d")
    lhs = _single(Diagram((a, b)).split(1, a - d, d).merge(2)
                  .split(2, c, b + d - c).merge(1))
    crossings = [(binomial(a - d + t, t),
                  Diagram((a, b)).split(1, a - d + t, d - t).split(3, c - t, b - c + t)
                  .cross(2).merge(1).merge(2))
                 for t in _square_range(b, c, d)]
    ladders = [(binomial(a - b + c - d, t),
                Diagram((a, b)).split(2, c - t, b - c + t).merge(1)
                .split(1, a + c - d, d - t).merge(2))
               for t in _square_range(b, c, d)]
    return lhs, crossings, ladders


def rel_jonsquare(a: int, b: int, c: int, d: int) -> list[Equation]:
    lhs, crossings, _ = _jonsquare_sides(a, b, c, d)
    return [[lhs, crossings]]


def rel_jonsquare2(a: int, b: int, c: int, d: int) -> list[Equation]:
    return [_mirror_eq(e) for e in rel_jonsquare(b, a, d, c)]


def rel_sl2rel(a: int, b: int, c: int, d: int) -> list[Equation]:
    lhs, _, ladders = _jonsquare_sides(a, b, c, d)
    return [[lhs, ladders]]


def rel_sl2rel2(a: int, b: int, c: int, d: int) -> list[Equation]:
    return [_mirror_eq(e) for e in rel_sl2rel(b, a, d, c)]


def _ladder(a: int, b: int, t: int) -> Diagram:
    return Diagram((a, b)).split(1, t, a - t).merge(2).split(2, b - t, a).merge(1)


def _ladder_mirror(a: int, b: int, t: int) -> Diagram:
    return Diagram((a, b)).split(2, b - t, t).merge(1).split(1, b, a - t).merge(2)


def rel_thickcrossing(a: int, b: int) -> list[Equation]:
    cross = _single(Diagram((a, b)).cross(1))
    via_merge = [(1, Diagram((a, b)).merge(1).split(1, b, a))]
    via_merge += [(-1, _mergesplit_term(a, b, t, t)) for t in range(1, min(a, b) + 1)]
    ladders = [((-1) ** t, _ladder(a, b, t)) for t in range(min(a, b) + 1)]
    mirrored = [((-1) ** t, _ladder_mirror(a, b, t)) for t in range(min(a, b) + 1)]
    return [[cross, via_merge, ladders, mirrored]]


def rel_askthink(a: int, b: int) -> list[Equation]:
    cross = _single(Diagram((a, b)).cross(1))
    ladders = [((-1) ** t, _ladder(a, b, t)) for t in range(min(a, b) + 1)]
    return [[cross, ladders]]


def rel_serre(a: int, b: int, c: int) -> list[Equation]:
    def seq(moves: str) -> Diagram:
        d = Diagram((a + 2, b, c))
        for m in moves:
            d.move_right(int(m), 1)
        return d

    eq = [[(2, seq("121"))], [(1, seq("211")), (1, seq("112"))]]
    return [eq, _mirror_eq(eq)]


def rel_swallows(a: int, b: int) -> list[Equation]:
    merge = [_single(Diagram((a, b)).cross(1).merge(1)), _single(Diagram((a, b)).merge(1))]
    split = [_single(Diagram((a + b,)).split(1, b, a).cross(1)),
             _single(Diagram((a + b,)).split(1, a, b))]
    return [merge, split]


def rel_sliders(a: int, b: int, c: int) -> list[Equation]:
    eq = [_single(Diagram((b + c, a)).cross(1).split(2, b, c)),
          _single(Diagram((b + c, a)).split(1, b, c).cross(2).cross(1))]
    return [eq, _mirror_eq(eq), _flip_eq(eq), _flip_eq(_mirror_eq(eq))]


def rel_symmetric(a: int, b: int) -> list[Equation]:
    return [[_single(Diagram((a, b)).cross(1).cross(1)), _single(Diagram((a, b)))]]


def rel_braid(a: int, b: int, c: int) -> list[Equation]:
    return [[_single(Diagram((a, b, c)).cross(1).cross(2).cross(1)),
             _single(Diagram((a, b, c)).cross(2).cross(1).cross(2))]]


RELATIONS: dict[str, tuple[Callable[..., list[Equation]], tuple[str, ...]]] = {
    "assrel": (rel_assrel, ("a", "b", "c")),
    "trivial": (rel_trivial, ("a", "b")),
    "mergesplit": (rel_mergesplit, ("a", "b", "c", "d")),
    "jonsquare": (rel_jonsquare, ("a", "b", "c", "d")),
    "jonsquare2": (rel_jonsquare2, ("a", "b", "c", "d")),
    "thickcrossing": (rel_thickcrossing, ("a", "b")),
    "serre": (rel_serre, ("a", "b", "c")),
    "swallows": (rel_swallows, ("a", "b")),
    "sliders": (rel_sliders, ("a", "b", "c")),
    "symmetric": (rel_symmetric, ("a", "b")),
    "braid": (rel_braid, ("a", "b", "c")),
    "sl2rel": (rel_sl2rel, ("a", "b", "c", "d")),
    "sl2rel2": (rel_sl2rel2, ("a", "b", "c", "d")),
    "askthink": (rel_askthink, ("a", "b")),
}


def relation_equations(name: str, *params: int) -> list[Equation]:
    if name not in RELATIONS:
        raise WebError(f"unknown relation {name!r}; known: {', '.join(RELATIONS)}")
    fn, names = RELATIONS[name]
    if len(params) != len(names):
        raise WebError(f"{name} takes parameters {', '.join(names)}")
    if any(p < 0 for p in params):
        raise WebError("thickness labels must be nonnegative")
    return fn(*params)


def check_relation(name: str, *params: int) -> bool:
    """Evaluate every side of the named relation and compare."""
    for eq in relation_equations(name, *params):
        first = next(d for side in eq for _, d in side)
        source = first.bottom
        target = first.top
        values = [evaluate_sum(side, source, target) for side in eq]
        if any(v != values[0] for v in values[1:]):
            return False
    return True


def valid_parameters(name: str, bound: int) -> Iterator[tuple[int, ...]]:
    """All parameter tuples with labels in 0..bound meeting the side conditions."""
    _, names = RELATIONS[name]
    for params in product(range(bound + 1), repeat=len(names)):
        if name == "mergesplit":
            a, b, c, d = params
            if a + c != b + d:
                continue
        if name in ("jonsquare", "sl2rel"):
            a, b, c, d = params
            if not (d <= a and c <= b + d):
                continue
        if name in ("jonsquare2", "sl2rel2"):
            a, b, c, d = params
            if not (c <= b and d <= a + c):
                continue
        yield params
