import random
from itertools import product

import pytest

from tiltss.schur import SchurMorphism, plan_matrices, tensor
from tiltss.weights import strict_compositions
from tiltss.web import (RELATIONS, Diagram, WebError, WebSyntaxError, WebWord,
                        chicken_foot_word, check_relation, evaluate, evaluate_sum,
                        format_normal_form, normalize, parse, relation_equations,
                        valid_parameters, _jonsquare_sides, _ladder)

A = ((1, 0, 3), (2, 2, 1))


# ------------------------------------------------------------------ parsing

def test_parse_examples():
    w = parse("obj 1 1 / merge 1")
    assert w.bottom == (1, 1) and w.top == (2,)
    w = parse("obj 2 / split 1 1 1 / merge 1")
    assert w.top == (2,) and len(w.layers) == 2


def test_parse_errors_carry_line_numbers():
    with pytest.raises(WebSyntaxError) as e:
        parse("obj 2\nsplit 1 1 2")
    assert e.value.line == 2
    with pytest.raises(WebSyntaxError):
        parse("merge 1")
    with pytest.raises(WebSyntaxError):
        parse("obj 1 1\ncross 2")
    with pytest.raises(WebSyntaxError):
        parse("obj 1 x")
    with pytest.raises(WebSyntaxError):
        parse("# nothing here")


def test_parse_comments_and_sugar():
    w = parse("obj 1 2 3  # three strands\nmerge 1 3")
    assert w.top == (6,) and len(w.layers) == 2
    w = parse("obj 6\nsplit 1 1 2 3")
    assert w.top == (1, 2, 3)


def test_to_text_round_trip():
    w = chicken_foot_word(A)
    assert parse(w.to_text()) == w


# --------------------------------------------------------------- evaluation

def test_generator_images():
    assert evaluate(parse("obj 2 3 / merge 1")) == SchurMorphism.basis(((2, 3),))
    assert evaluate(parse("obj 5 / split 1 2 3")) == SchurMorphism.basis(((2,), (3,)))
    assert evaluate(parse("obj 2 3 / cross 1")) == SchurMorphism.basis(((0, 3), (2, 0)))


def test_merge_after_split_is_binomial():
    assert normalize(parse("obj 2 / split 1 1 1 / merge 1")) == [(((2,),), 2)]
    assert normalize(parse("obj 5 / split 1 2 3 / merge 1")) == [(((5,),), 10)]


def test_empty_word_is_identity():
    assert normalize(parse("obj 2 1")) == [(((2, 0), (0, 1)), 1)]


def test_chicken_foot_word_worked_example():
    assert normalize(chicken_foot_word(A)) == [(A, 1)]
    assert format_normal_form(normalize(chicken_foot_word(A))) == "1  1,0,3;2,2,1"


def test_straightening_completeness():
    for d in range(1, 7):
        objs = [c for c in strict_compositions(d) if len(c) <= 3]
        for lam, mu in product(objs, repeat=2):
            for a in plan_matrices(lam, mu):
                assert normalize(chicken_foot_word(a)) == [(a, 1)]


def random_word(rng, obj, steps):
    layers = []
    w = WebWord(obj)
    for _ in range(steps):
        top = w.top
        opts = []
        for i in range(len(top) - 1):
            opts += [f"merge {i + 1}", f"cross {i + 1}"]
        for i, t in enumerate(top):
            for a in range(1, t):
                opts.append(f"split {i + 1} {a} {t - a}")
        if not opts:
            break
        layers.append(rng.choice(opts))
        w = parse("obj " + " ".join(map(str, obj)) + "\n" + "\n".join(layers))
    return w


def test_evaluation_is_monoidal():
    rng = random.Random(5)
    for _ in range(60):
        u = random_word(rng, (rng.randint(1, 3), rng.randint(1, 2)), rng.randint(0, 3))
        v = random_word(rng, (rng.randint(1, 3),), rng.randint(0, 3))
        assert evaluate(u.beside(v)) == tensor(evaluate(u), evaluate(v))


def test_stacking_is_composition():
    u = parse("obj 1 2 / merge 1")
    v = parse("obj 3 / split 1 2 1")
    w = u.then(v)
    assert evaluate(w) == evaluate(v) @ evaluate(u)
    with pytest.raises(WebError):
        u.then(u)


# ----------------------------------------------------------------- relations

def test_relation_examples():
    assert check_relation("trivial", 2, 3)
    assert check_relation("symmetric", 1, 1)
    assert check_relation("serre", 1, 1, 1)


def test_relation_registry_complete():
    assert set(RELATIONS) == {"assrel", "trivial", "mergesplit", "jonsquare", "jonsquare2",
                              "thickcrossing", "serre", "swallows", "sliders", "symmetric",
                              "braid", "sl2rel", "sl2rel2", "askthink"}


@pytest.mark.parametrize("name", sorted(RELATIONS))
def test_relation_sweep(name):
    bound = 3 if name == "serre" else 4
    params = list(valid_parameters(name, bound))
    assert params
    bad = [p for p in params if not check_relation(name, *p)]
    assert bad == []


def test_relation_errors():
    with pytest.raises(WebError):
        check_relation("nope", 1)
    with pytest.raises(WebError):
        check_relation("trivial", 1)
    with pytest.raises(WebError):
        check_relation("mergesplit", 1, 1, 1, 2)
    with pytest.raises(WebError):
        check_relation("jonsquare", 1, 1, 1, 2)


def test_askthink_alternating_ladders():
    for a, b in product(range(1, 5), repeat=2):
        cross = evaluate(parse(f"obj {a} {b} / cross 1"))
        ladders = evaluate_sum([((-1) ** t, _ladder(a, b, t)) for t in range(min(a, b) + 1)],
                               (a, b), (b, a))
        assert cross == ladders


# negative controls: a wrong coefficient must be detected

def test_trivial_detects_wrong_binomial():
    lhs = evaluate_sum([(1, Diagram((5,)).split(1, 2, 3).merge(1))], (5,), (5,))
    assert lhs == evaluate_sum([(10, Diagram((5,)))], (5,), (5,))
    assert lhs != evaluate_sum([(9, Diagram((5,)))], (5,), (5,))


def test_askthink_needs_signs():
    a, b = 2, 2
    cross = evaluate(parse(f"obj {a} {b} / cross 1"))
    unsigned = evaluate_sum([(1, _ladder(a, b, t)) for t in range(3)], (a, b), (b, a))
    assert cross != unsigned


def test_square_coefficients_not_interchangeable():
    # the crossing expansion and the ladder expansion use different binomials
    found = False
    for a, b, c, d in valid_parameters("jonsquare", 4):
        lhs, crossings, ladders = _jonsquare_sides(a, b, c, d)
        target = evaluate_sum(lhs, (a, b), (a + c - d, b + d - c))
        swapped = [(c2, dia) for (c2, _), (_, dia) in zip(ladders, crossings)]
        if evaluate_sum(swapped, (a, b), (a + c - d, b + d - c)) != target:
            found = True
            break
    assert found


def test_serre_coefficient_matters():
    eq = relation_equations("serre", 1, 1, 1)[0]
    dia = eq[0][0][1]
    left = evaluate_sum([(1, d) for _, d in eq[0]], dia.bottom, dia.top)
    right = evaluate_sum(eq[1], dia.bottom, dia.top)
    assert left != right


# ---------------------------------------------------------------- diagrams

def test_diagram_zero_strands_and_dead():
    d = Diagram((2, 0)).merge(1)
    assert d.word() == WebWord((2,))
    d = Diagram((2,)).split(1, 3, -1)
    assert d.dead and d.word() is None
    with pytest.raises(WebError):
        Diagram((2,)).split(1, 1, 2)


def flipped(f):
    return {tuple(zip(*m)): c for m, c in f.items()}


def mirrored(f):
    return {tuple(r[::-1] for r in m[::-1]): c for m, c in f.items()}


def test_diagram_mirror_and_flip():
    d = Diagram((1, 2)).merge(1).split(1, 2, 1)
    m = d.mirror()
    assert m.bottom == (2, 1) and m.top == (1, 2)
    f = d.flip()
    assert f.bottom == (2, 1) and f.top == (1, 2)
    # flipping transposes every plan matrix, mirroring reverses rows and columns
    assert dict(evaluate(f.word()).items()) == flipped(evaluate(d.word()))
    assert dict(evaluate(m.word()).items()) == mirrored(evaluate(d.word()))


def test_mirror_flip_on_squares():
    for a, b, c, dd in [(2, 1, 1, 1), (3, 2, 2, 1), (2, 2, 1, 0)]:
        lhs, crossings, _ = _jonsquare_sides(a, b, c, dd)
        for _, dia in lhs + crossings:
            w = dia.word()
            if w is None:
                continue
            assert dict(evaluate(dia.flip().word()).items()) == flipped(evaluate(w))
            assert dict(evaluate(dia.mirror().word()).items()) == mirrored(evaluate(w))
