"""Command-line front end: ``solvpair <command> PAIR.json [options]``."""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import List

from . import properties as props
from .exactalg import MINUS_INFINITY, Poly, format_poly, format_rat, parse
from .pair import SolvablePair, pair_from_json
from .randpoly import RandomPolyConfig, random_poly
from .selftest import SelftestConfig, run_selftest
from . import structure as st
from . import slicing

EXIT_OK, EXIT_FAIL = 0, 1


class Falsified(Exception):
    """A checked property did not hold; output is already printed."""


def load_pair(path: str, bound: int | None = None) -> SolvablePair:
    if path == "-":
        obj = json.load(sys.stdin)
    else:
        with open(path) as fh:
            obj = json.load(fh)
    return pair_from_json(obj, bound) if bound else pair_from_json(obj)


def resolve_seed(arg) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("SOLVPAIR_SEED")
    return int(env) if env else 0


def emit(args, text_lines: List[str], payload: dict):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _deg(x):
    return "-inf" if x == MINUS_INFINITY else str(x)


def cmd_validate(args):
    p = load_pair(args.pair, args.bound)
    c = p.cert
    emit(args, [f"valid solvable pair on {p.nvars} variables",
                f"nilpotency exponents: {' '.join(map(str, c.exponents))} (N = {c.N}, by {c.method})"],
         {"valid": True, "nvars": p.nvars, "exponents": list(c.exponents), "N": c.N, "method": c.method})


def cmd_eval(args):
    p = load_pair(args.pair)
    rd = lambda t: parse(t, p.nvars)
    names = None
    if args.bracket:
        out = p.bracket(*map(rd, args.bracket))
    elif args.star:
        out = p.star(*map(rd, args.star))
    elif args.star_t:
        out = p.star_t(*map(rd, args.star_t))
        names = [f"X{i}" for i in range(p.nvars)] + ["t"]
    elif args.phi:
        out = p.phi(args.phi[0], rd(args.phi[1]))
    elif args.delta_log:
        out = p.log_delta(rd(args.delta_log))
    else:
        f = rd(args.epsilon)
        e = p.epsilon(f)
        emit(args, [_deg(e)], {"epsilon": _deg(e)})
        return
    text = format_poly(out, names)
    emit(args, [text], {"result": text})


def cmd_reduce(args):
    p = load_pair(args.pair)
    b = st.jordan_reduce(p)
    rows = b.M.to_strings()
    lines = [f"jordan type: {' '.join(map(str, b.jordan_type))}",
             f"offsets: {' '.join(format_rat(a) for a in b.offsets)}",
             f"eigenvalues: {' '.join(format_rat(a) for a in b.eigenvalues)}",
             "new variables:"]
    lines += [f"  Y{j} = {y}" for j, y in enumerate(b.new_variables())]
    emit(args, lines, {"jordan_type": list(b.jordan_type), "offsets": [format_rat(a) for a in b.offsets],
                       "eigenvalues": [format_rat(a) for a in b.eigenvalues], "M": rows})


def cmd_center(args):
    p = load_pair(args.pair)
    basis = st.center(p, args.degree, poisson=args.poisson)
    kind = "Poisson center" if args.poisson else "center"
    lines = [f"{kind} in degree <= {args.degree}: dimension {len(basis)}"] + [f"  {f}" for f in basis]
    emit(args, lines, {"degree": args.degree, "poisson": args.poisson, "dim": len(basis),
                       "basis": [str(f) for f in basis]})


def cmd_pder(args):
    p = load_pair(args.pair)
    basis = st.pder_basis(p)
    lines = [f"graded Poisson derivations: dimension {len(basis)}"]
    for k, m in enumerate(basis):
        lines.append(f"  D{k}: " + "; ".join(" ".join(r) for r in m.to_strings()))
    emit(args, lines, {"dim": len(basis), "basis": [m.to_strings() for m in basis]})


def cmd_normal(args):
    p = load_pair(args.pair)
    lines, payload = [], []
    fails = False
    for d in range(1, args.degree + 1):
        spaces = st.strongly_normal_space(p, d)
        entry = {"degree": d, "eigenspaces": []}
        for lam, vecs in spaces:
            good = all(st.check_strongly_normal_behavior(p, v, lam, args.check_degree) for v in vecs)
            fails |= not good
            lines.append(f"degree {d}, eigenvalue {format_rat(lam)}: "
                         + ", ".join(map(str, vecs)) + ("" if good else "  [behaviour check FAILED]"))
            entry["eigenspaces"].append({"eigenvalue": format_rat(lam), "basis": [str(v) for v in vecs],
                                         "behaviour": good})
        if p.is_linear:
            extra = st.normal_falsification(p, d)
            entry["normal_not_strongly_normal"] = [str(v) for v in extra]
            if extra:
                lines.append(f"degree {d}: normal elements outside ker delta: " + ", ".join(map(str, extra)))
        payload.append(entry)
    emit(args, lines or ["no strongly normal elements found"], {"degrees": payload})
    if fails:
        raise Falsified()


def cmd_relations(args):
    p = load_pair(args.pair)
    b = st.jordan_reduce(p)
    rels = st.relations(p, b)
    names = [f"Y{j}" for j in range(p.nvars)]
    lines = [f"  Y{j} = {y}" for j, y in enumerate(b.new_variables())]
    lines = ["generators:"] + lines + ["relations:"]
    lines += [f"  {r.format(names)}    [{'ok' if r.holds else 'FAILED'}]" for r in rels]
    emit(args, lines, {"generators": [str(y) for y in b.new_variables()],
                       "relations": [{"text": r.format(names), "holds": r.holds} for r in rels]})
    if not all(r.holds for r in rels):
        raise Falsified()


def cmd_hilbert(args):
    p = load_pair(args.pair)
    res = [st.hilbert_check(p, d) for d in range(args.degree + 1)]
    lines = [f"degree {r.degree}: rank {r.rank}, expected {r.expected} [{'ok' if r.ok else 'FAILED'}]" for r in res]
    emit(args, lines, {"degrees": [{"degree": r.degree, "rank": r.rank, "expected": r.expected} for r in res]})
    if not all(r.ok for r in res):
        raise Falsified()


def cmd_slice_check(args):
    p = load_pair(args.pair)
    ctx = slicing.localize(p, parse(args.r, p.nvars))
    rng = random.Random(resolve_seed(args.seed))
    cfg = RandomPolyConfig(max_degree=3, max_terms=3)
    hom = proj = comm = True
    for _ in range(args.samples):
        f, g = random_poly(rng, p.nvars, cfg), random_poly(rng, p.nvars, cfg)
        pf, pg = ctx.pi(f), ctx.pi(g)
        hom &= ctx.pi(f * g) == pf * pg
        proj &= ctx.pi(pf) == pf and not ctx.delta(pf)
        comm &= ctx.gamma(pf) == ctx.pi(p.gamma(f))
    ore = slicing.ore_check(ctx, args.degree)
    lines = [f"s = {ctx.s}", f"delta(s) = {ctx.delta(ctx.s)}",
             f"pi homomorphism: {hom}", f"pi projection: {proj}", f"pi commutes with gamma: {comm}",
             f"ore check (degree {args.degree}): {ore.ok}"]
    gens = []
    if st.is_generic(p) and p.gamma.linear_matrix == _diag(p):
        gens = slicing.kernel_generators(ctx)
        lines += [f"  Y{i} = {y}  (eigenvalue {format_rat(lam)})" for i, y, lam in gens]
    emit(args, lines, {"s": str(ctx.s), "homomorphism": hom, "projection": proj, "commutes_with_gamma": comm,
                       "ore": ore.ok, "kernel_generators": [{"index": i, "element": str(y),
                                                             "eigenvalue": format_rat(lam)} for i, y, lam in gens]})
    if not (hom and proj and comm and ore.ok and ctx.delta(ctx.s) == 1):
        raise Falsified()


def _diag(p):
    from .linalg import RatMatrix
    g = p.gamma.linear_matrix
    return RatMatrix.diagonal([g[i][i] for i in range(p.nvars)])


def cmd_report(args):
    p = load_pair(args.pair)
    rep = st.structure_report(p, args.center_degree).to_json()
    lines = [f"{k}: {_show(v)}" for k, v in rep.items()]
    emit(args, lines, rep)


def _show(v):
    if v is None:
        return "undetermined"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return " ".join(map(str, v))
    return str(v)


def cmd_selftest(args):
    cfg = SelftestConfig(seed=resolve_seed(args.seed), samples=args.samples)
    pairs = {args.pair: load_pair(args.pair)} if args.pair else None
    results = run_selftest(cfg, pairs)
    emit(args, [r.line() for r in results] + [f"seed {cfg.seed}: {'all passed' if all(r.ok for r in results) else 'FAILURES'}"],
         {"seed": cfg.seed, "suites": [{"name": r.name, "passed": r.passed, "total": r.total} for r in results]})
    if not all(r.ok for r in results):
        raise Falsified()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None, help="random seed (default: $SOLVPAIR_SEED or 0)")

    ap = argparse.ArgumentParser(prog="solvpair", description="Exact computations with solvable pairs of derivations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, pair=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if pair:
            sp.add_argument("pair", help="pair JSON file, or - for stdin")
        sp.set_defaults(func=fn)
        return sp

    sp = add("validate", cmd_validate, "check [delta, gamma] = delta and nilpotency")
    sp.add_argument("--bound", type=int, default=None, help="search bound for nonlinear delta")

    sp = add("eval", cmd_eval, "evaluate one operation")
    ops = sp.add_mutually_exclusive_group(required=True)
    ops.add_argument("--bracket", nargs=2, metavar=("F", "G"))
    ops.add_argument("--star", nargs=2, metavar=("F", "G"))
    ops.add_argument("--star-t", nargs=2, metavar=("F", "G"), dest="star_t")
    ops.add_argument("--phi", nargs=2, metavar=("A", "F"))
    ops.add_argument("--delta-log", metavar="F", dest="delta_log")
    ops.add_argument("--epsilon", metavar="F")

    add("reduce", cmd_reduce, "Jordan-reduce a linear pair")

    sp = add("center", cmd_center, "center in bounded degree")
    sp.add_argument("--degree", type=int, default=3)
    sp.add_argument("--poisson", action="store_true")

    add("pder", cmd_pder, "graded Poisson derivations")

    sp = add("normal", cmd_normal, "strongly normal elements by degree")
    sp.add_argument("--degree", type=int, default=2)
    sp.add_argument("--check-degree", type=int, default=3, dest="check_degree")

    add("relations", cmd_relations, "quadratic presentation of the star algebra")

    sp = add("hilbert", cmd_hilbert, "rank of ordered star monomials")
    sp.add_argument("--degree", type=int, default=4)

    sp = add("slice-check", cmd_slice_check, "localize and check the slice identities")
    sp.add_argument("--r", required=True, help="element with delta(r) a kernel variable")
    sp.add_argument("--degree", type=int, default=3)
    sp.add_argument("--samples", type=int, default=50)

    sp = add("report", cmd_report, "structure report")
    sp.add_argument("--center-degree", type=int, default=2, dest="center_degree")

    sp = sub.add_parser("selftest", parents=[common], help="seeded property sweep")
    sp.add_argument("pair", nargs="?", default=None, help="optional pair JSON (default: built-in fixtures)")
    sp.add_argument("--samples", type=int, default=20)
    sp.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except Falsified:
        return EXIT_FAIL
    except (ValueError, ArithmeticError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
