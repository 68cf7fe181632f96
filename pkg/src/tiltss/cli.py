"""Command-line interface: ``tiltss <command> ...``.

Every command prints a plain-text rendering of its result, or with
``--json`` a single object {"ok": true, "result": ...}.  Domain errors
exit with status 1 ({"ok": false, "error": ...} under --json); usage
errors exit with status 2.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable, Sequence

from . import arith, exterior, schur, ssimp, tilting, verlinde, web
from .acceptance import SUITES, run_suite
from .schur import PlanMatrix, SchurMorphism, format_matrix, parse_matrix
from .weights import format_weight, parse_weight


class DomainError(ValueError):
    pass


def max_degree() -> int:
    raw = os.environ.get("TILTSS_MAX_D", "8")
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"TILTSS_MAX_D must be an integer, got {raw!r}") from None


def guard_degree(d: int) -> None:
    limit = max_degree()
    if d > limit:
        raise DomainError(f"degree {d} exceeds TILTSS_MAX_D={limit}")


# ------------------------------------------------------------ input parsing

def parse_morphism(text: str) -> SchurMorphism:
    """Terms "c*M" joined by '+', where M is a matrix like "1,0,3;2,2,1"."""
    terms: dict[PlanMatrix, int] = {}
    source = target = None
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        coeff = 1
        if "*" in chunk:
            c, chunk = chunk.split("*", 1)
            coeff = int(c)
        m = parse_matrix(chunk)
        src, tgt = schur.col_sums(m), schur.row_sums(m)
        if source is None:
            source, target = src, tgt
        elif (src, tgt) != (source, target):
            raise DomainError("all terms must lie in the same hom space")
        terms[m] = terms.get(m, 0) + coeff
    if source is None:
        raise DomainError("empty morphism")
    return SchurMorphism(source, target, terms)


def morphism_json(f: SchurMorphism) -> dict:
    return {"source": list(f.source), "target": list(f.target),
            "terms": [[c, format_matrix(m)] for m, c in f.items()]}


def read_program(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg):
        with open(arg) as fh:
            return fh.read()
    return arg


def fusion_json(v: dict) -> list:
    return [[format_weight(w), c] for w, c in sorted(v.items(), reverse=True)]


# --------------------------------------------------------------- commands

def cmd_digits(a):
    return list(arith.p_adic_digits(a.n, a.p))


def cmd_lucas(a):
    direct = arith.binomial(a.n, a.k) % a.p
    return {"binomial": arith.binomial(a.n, a.k), "mod_p": arith.binomial_mod_p(a.n, a.k, a.p),
            "digit_product_mod_p": arith.lucas_product(a.n, a.k, a.p) % a.p,
            "agree": direct == arith.binomial_mod_p(a.n, a.k, a.p)}


def cmd_weyl_dim(a):
    return arith.weyl_dim(parse_weight(a.weight))


def cmd_trinomial(a):
    return arith.trinomial_sum(a.m, a.n)


def cmd_density(a):
    return arith.density_scalar(a.k, a.p).value


def cmd_iota(a):
    comps = [parse_weight(c) for c in a.components]
    return format_weight(tilting.iota(comps, a.p, a.n))


def cmd_decompose(a):
    w = parse_weight(a.weight)
    t = tilting.decompose_weight(w, len(w), a.p)
    return None if t is None else [format_weight(c) for c in t]


def cmd_membership(a):
    w = parse_weight(a.weight)
    return tilting.membership(w, len(w), a.p)


def cmd_tilt_dim(a):
    w = parse_weight(a.weight)
    return tilting.tilt_dim_mod_p(w, len(w), a.p).value


def cmd_z(a):
    return schur.z_coefficient(parse_matrix(a.A), parse_matrix(a.B), parse_matrix(a.C))


def cmd_compose(a):
    f, g = parse_morphism(a.f), parse_morphism(a.g)
    guard_degree(sum(f.source))
    return morphism_json(schur.compose(f, g))


def cmd_tensor(a):
    f, g = parse_morphism(a.f), parse_morphism(a.g)
    guard_degree(sum(f.source) + sum(g.source))
    return morphism_json(schur.tensor(f, g))


def cmd_triple(a):
    t = schur.triple_decompose(parse_matrix(a.A))
    return {"A_minus": format_matrix(t.A_minus), "A_zero": format_matrix(t.A_zero),
            "A_plus": format_matrix(t.A_plus), "g": schur.perm_to_cycles(t.perm),
            "lambda_minus": format_weight(t.lambda_minus), "mu_plus": format_weight(t.mu_plus)}


def cmd_dcoset(a):
    g = schur.double_coset_perm(parse_matrix(a.A))
    return list(g) if a.one_line else schur.perm_to_cycles(g)


def cmd_codet(a):
    lam, mu = parse_weight(a.lam), parse_weight(a.mu)
    guard_degree(sum(lam))
    out = []
    for p, q, g in schur.codeterminant_basis(lam, mu):
        out.append({"P": [list(r) for r in p.rows], "Q": [list(r) for r in q.rows],
                    "gamma": morphism_json(g)["terms"]})
    return out


def _word_arg(a) -> web.WebWord:
    w = web.parse(read_program(a.program))
    guard_degree(sum(w.bottom))
    return w


def cmd_web_eval(a):
    return morphism_json(web.evaluate(_word_arg(a)))


def cmd_web_normalize(a):
    return web.format_normal_form(web.normalize(_word_arg(a)))


def _relation_params(a) -> list[int]:
    _, names = web.RELATIONS.get(a.name, (None, ()))
    if a.name not in web.RELATIONS:
        raise DomainError(f"unknown relation {a.name!r}; known: {', '.join(web.RELATIONS)}")
    params = []
    for nm in names:
        v = getattr(a, nm)
        if v is None:
            raise DomainError(f"{a.name} needs --{nm}")
        params.append(v)
    return params


def cmd_web_check(a):
    return web.check_relation(a.name, *_relation_params(a))


def cmd_web_check_all(a):
    out = {}
    for name in web.RELATIONS:
        bound = min(a.max, 3) if name == "serre" else a.max
        params = list(web.valid_parameters(name, bound))
        failed = [list(ps) for ps in params if not web.check_relation(name, *ps)]
        out[name] = {"checked": len(params), "failed": failed}
    return out


def cmd_sigma_eval(a):
    f = parse_morphism(a.f)
    guard_degree(sum(f.source))
    return exterior.sigma_eval(f, a.n).tolist()


def cmd_oracle_xi(a):
    m = parse_matrix(a.A)
    guard_degree(sum(schur.row_sums(m)))
    return exterior.tensor_oracle_xi(m, a.n).tolist()


def cmd_hom_dim_q(a):
    mu, lam = parse_weight(a.mu), parse_weight(a.lam)
    guard_degree(sum(mu))
    return exterior.hom_dim_Q(mu, lam, a.n)


def cmd_tableau_count(a):
    return exterior.tableau_count(parse_weight(a.mu), parse_weight(a.lam), a.n)


def cmd_obj_dim(a):
    return ssimp.object_dim_mod_p(ssimp.parse_word(a.word), a.n, a.p).value


def cmd_gram_rank(a):
    x, y = ssimp.parse_word(a.x), ssimp.parse_word(a.y)
    guard_degree(max(sum(x), sum(y)))
    return ssimp.gram_rank(x, y, a.n, a.p, canonical=not a.no_canonical)


def cmd_gray_check(a):
    guard_degree(a.p ** a.m)
    return ssimp.gray_check(a.m, a.a, a.n, a.p)


def cmd_lr(a):
    lam, mu = parse_weight(a.lam), parse_weight(a.mu)
    return fusion_json(verlinde.lr_tensor(lam, mu, len(lam)))


def cmd_straighten(a):
    nu = parse_weight(a.nu)
    res = verlinde.alcove_straighten(nu, len(nu), a.p)
    return None if res is None else {"sign": res[0], "weight": format_weight(res[1])}


def cmd_fuse(a):
    return fusion_json(verlinde.fuse(parse_weight(a.lam), parse_weight(a.mu), a.p))


def cmd_verlinde_hom(a):
    return verlinde.verlinde_hom_dim(ssimp.parse_word(a.x), ssimp.parse_word(a.y), a.n, a.p)


def cmd_tilt_decompose(a):
    return fusion_json(verlinde.tilt_decompose_word(ssimp.parse_word(a.word), a.n, a.p))


def cmd_verify(a):
    names = list(SUITES) if a.suite == "all" else [a.suite]
    results = [run_suite(name) for name in names]
    for r in results:
        print(r.line(), file=sys.stderr)
    return {r.name: r.ok for r in results}


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON object")
    parser = argparse.ArgumentParser(prog="tiltss", parents=[common],
                                     description="Schur/web categories and tilting semisimplification")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, fn: Callable, help_: str, *args: tuple) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_, description=help_)
        for spec in args:
            flags, kw = spec[0], spec[1] if len(spec) > 1 else {}
            sp.add_argument(*flags, **kw)
        sp.set_defaults(func=fn)
        return sp

    I = {"type": int}
    add("digits", cmd_digits, "p-adic digits of n", (["n"], I), (["p"], I))
    add("lucas", cmd_lucas, "binom(n,k) mod p directly and by digits", (["n"], I), (["k"], I), (["p"], I))
    add("weyl-dim", cmd_weyl_dim, "Weyl dimension of a dominant weight such as 2,1,0", (["weight"],))
    add("trinomial", cmd_trinomial, "alternating trinomial sum (always 1)", (["m"], I), (["n"], I))
    add("density-scalar", cmd_density, "k!/prod (k_i p^i)! mod p", (["k"], I), (["p"], I))
    add("iota", cmd_iota, "assemble a GL_n weight from factor weights ('' for rank 0)",
        (["p"], I), (["components"], {"nargs": "+"}), (["--n"], I))
    add("decompose", cmd_decompose, "inverse of iota (null if not in X+_{n,p})", (["weight"],), (["p"], I))
    add("membership", cmd_membership, "is the weight in X+_{n,p} (p = 0 allowed)", (["weight"],), (["p"], I))
    add("tilt-dim", cmd_tilt_dim, "dim T_n(weight) mod p", (["weight"],), (["p"], I))
    add("z-coeff", cmd_z, "Z(A, B, C) for matrices like 1,0;0,1", (["A"],), (["B"],), (["C"],))
    add("compose", cmd_compose, "compose morphisms f o g given as sums of c*matrix", (["f"],), (["g"],))
    add("tensor", cmd_tensor, "tensor product of morphisms", (["f"],), (["g"],))
    add("triple", cmd_triple, "triple decomposition of a plan matrix", (["A"],))
    add("dcoset", cmd_dcoset, "double coset permutation d_A", (["A"],),
        (["--one-line"], {"action": "store_true"}))
    add("codet", cmd_codet, "codeterminant basis of Hom(mu, lam)", (["lam"],), (["mu"],))
    add("web-eval", cmd_web_eval, "evaluate a web program (file, '-' for stdin, or inline)", (["program"],))
    add("web-normalize", cmd_web_normalize, "straightened normal form of a web program", (["program"],))
    sp = add("web-check", cmd_web_check, "check a named relation", (["name"],))
    for nm in "abcd":
        sp.add_argument(f"--{nm}", type=int)
    add("web-check-all", cmd_web_check_all, "sweep every relation", (["--max"], {"type": int, "default": 4}))
    add("sigma-eval", cmd_sigma_eval, "matrix of Sigma_n(f) on exterior powers", (["f"],), (["--n"], {"type": int, "required": True}))
    add("oracle-xi", cmd_oracle_xi, "xi_A on tensor-space weight spaces", (["A"],), (["--n"], {"type": int, "required": True}))
    add("hom-dim-q", cmd_hom_dim_q, "dim Hom(Lambda^mu, Lambda^lam) over Q", (["mu"],), (["lam"],), (["--n"], {"type": int, "required": True}))
    add("tableau-count", cmd_tableau_count, "tableau count for Hom(Lambda^mu, Lambda^lam)", (["mu"],), (["lam"],), (["--n"], {"type": int, "required": True}))
    np_ = [(["--n"], {"type": int, "required": True}), (["--p"], {"type": int, "required": True})]
    add("obj-dim", cmd_obj_dim, "dimension of a word mod p", (["word"],), *np_)
    add("gram-rank", cmd_gram_rank, "rank of the trace pairing on Hom(X, Y) over F_p", (["x"],), (["y"],), *np_,
        (["--no-canonical"], {"action": "store_true"}))
    add("gray-check", cmd_gray_check, "negligibility of merge/split through p^m",
        (["--m"], {"type": int, "required": True}), (["--a"], {"type": int, "required": True}), *np_)
    add("lr", cmd_lr, "Littlewood-Richardson decomposition for GL_m", (["lam"],), (["mu"],))
    add("straighten", cmd_straighten, "fold a weight into the alcove", (["nu"],), (["--p"], {"type": int, "required": True}))
    add("fuse", cmd_fuse, "fusion product of alcove weights", (["lam"],), (["mu"],), (["--p"], {"type": int, "required": True}))
    add("verlinde-hom", cmd_verlinde_hom, "Hom dimension via the Verlinde factors", (["x"],), (["y"],), *np_)
    add("tilt-decompose", cmd_tilt_decompose, "decompose a word into tilting labels", (["word"],), *np_)
    add("verify", cmd_verify, "run an acceptance suite",
        (["suite"], {"choices": list(SUITES) + ["all"]}))
    return parser


def render(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, str)):
        return str(value)
    if isinstance(value, dict):
        return "\n".join(f"{k}: {render(v) if not isinstance(v, (dict, list)) else json.dumps(v)}"
                         for k, v in value.items())
    if isinstance(value, list) and all(isinstance(x, int) for x in value):
        return " ".join(map(str, value))
    if isinstance(value, list) and all(isinstance(x, list) for x in value):
        return "\n".join(" ".join(str(y) for y in x) for x in value)
    return json.dumps(value)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (ValueError, AssertionError) as e:
        if args.json:
            print(json.dumps({"ok": False, "error": str(e)}))
        else:
            print(f"error: {e}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({"ok": True, "result": result}, separators=(",", ":")))
    else:
        print(render(result))
    if args.command == "verify" and not all(result.values()):
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
