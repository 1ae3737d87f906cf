"""Command-line entry point.

Exit codes: 0 success, 1 a theorem check reported a mismatch, 2 usage or
input error (argparse also uses 2), 3 a construction or solver budget ran out.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corpus import FAMILIES
from .errors import GraphFormatError, PreconditionError, ResourceLimitError
from .graph import leaves, parse_edge_list, supports
from .harness import PARAMS, CampaignSpec, run_campaign
from .sierpinski import build_direct, sierpinski_dot, sierpinski_edge_list
from .solvers import (
    SolverBudget,
    chromatic_number,
    clique_number,
    enumerate_gamma_sets,
    independence_number,
    vertex_cover_number,
    xi,
)


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_edge_list(text)


def _budget(args) -> SolverBudget:
    return SolverBudget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds)


def _fmt_set(vs, one_indexed: bool) -> str:
    shift = 1 if one_indexed else 0
    return "{" + ",".join(str(v + shift) for v in sorted(vs)) + "}"


def cmd_gen(args) -> int:
    g = _read_graph(args.input)
    sg = build_direct(g, args.t, vertex_budget=args.vertex_budget)
    text = sierpinski_dot(sg, args.one_indexed) if args.dot else sierpinski_edge_list(sg)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_params(args) -> int:
    g = _read_graph(args.input)
    budget = _budget(args)
    one = args.one_indexed
    chi, _ = chromatic_number(g, budget)
    omega, clique = clique_number(g, budget)
    beta, cover = vertex_cover_number(g, budget)
    alpha, indep = independence_number(g, budget)
    fam = enumerate_gamma_sets(g, budget)
    gamma, dom = fam.gamma, fam.sets[0]  # sets come out in lexicographic order
    sup = supports(g)
    rows = [
        ("n", g.n), ("m", g.m),
        ("chi", chi), ("omega", omega), ("beta", beta), ("alpha", alpha),
        ("gamma", gamma), ("xi", xi(g, fam)), ("gamma_sets", len(fam)),
        ("max_clique", _fmt_set(clique, one)), ("min_cover", _fmt_set(cover, one)),
        ("max_independent", _fmt_set(indep, one)), ("min_dominating", _fmt_set(dom, one)),
        ("leaves", _fmt_set(leaves(g), one)),
        ("supports", " ".join(f"{x + one}:{k}" for x, k in sorted(sup.items())) or "-"),
    ]
    for key, val in rows:
        print(f"{key}={val}")
    return 0


def cmd_gamma_sets(args) -> int:
    g = _read_graph(args.input)
    fam = enumerate_gamma_sets(g, _budget(args))
    print(f"gamma={fam.gamma}")
    print(f"count={len(fam)}")
    shift = 1 if args.one_indexed else 0
    for s in fam.sets:
        print(" ".join(str(v + shift) for v in s))
    return 0


def cmd_verify(args) -> int:
    params = tuple(args.param) if args.param else PARAMS
    spec = CampaignSpec(
        family=args.family, max_n=args.max_n, min_n=args.min_n,
        t_min=args.t_min, t_max=args.t_max, params=params,
        max_vertices=args.max_vertices, solver_max_vertices=args.solver_max_vertices,
        gamma_exact_limit=args.gamma_exact_limit, budget=_budget(args),
    )
    report = run_campaign(spec, workers=args.jobs)
    text = report.to_text(args.timing)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.kv:
        Path(args.kv).write_text(report.to_kv(args.timing))
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sierpgraph",
                                description="Generalized Sierpinski graphs and their invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    def budget_opts(sp):
        sp.add_argument("--budget-seconds", type=float, default=300.0)
        sp.add_argument("--budget-nodes", type=int, default=10**9)

    g = sub.add_parser("gen", help="write S(G,t) as an edge list or DOT")
    g.add_argument("--in", dest="input", required=True, help="edge-list file ('-' for stdin)")
    g.add_argument("--t", type=int, required=True)
    g.add_argument("--dot", action="store_true")
    g.add_argument("--out")
    g.add_argument("--one-indexed", action="store_true")
    g.add_argument("--vertex-budget", type=int, default=None)
    g.set_defaults(func=cmd_gen)

    pa = sub.add_parser("params", help="exact invariants of a base graph")
    pa.add_argument("--in", dest="input", required=True)
    pa.add_argument("--one-indexed", action="store_true")
    budget_opts(pa)
    pa.set_defaults(func=cmd_params)

    v = sub.add_parser("verify", help="run formula-versus-solver checks over a corpus")
    v.add_argument("--family", required=True, choices=FAMILIES)
    v.add_argument("--max-n", type=int, required=True)
    v.add_argument("--min-n", type=int, default=1)
    v.add_argument("--t-min", type=int, default=1)
    v.add_argument("--t-max", type=int, default=2)
    v.add_argument("--param", action="append", choices=PARAMS)
    v.add_argument("--max-vertices", type=int, default=10**4)
    v.add_argument("--solver-max-vertices", type=int, default=125)
    v.add_argument("--gamma-exact-limit", type=int, default=64)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--out", help="text report path (default stdout)")
    v.add_argument("--kv", help="also write the key=value report here")
    v.add_argument("--timing", action="store_true", help="include wall times (breaks byte-identity)")
    budget_opts(v)
    v.set_defaults(func=cmd_verify)

    gs = sub.add_parser("gamma-sets", help="list every minimum dominating set")
    gs.add_argument("--in", dest="input", required=True)
    gs.add_argument("--one-indexed", action="store_true")
    budget_opts(gs)
    gs.set_defaults(func=cmd_gamma_sets)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "gen" and args.t < 1:
        print("error: --t must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (GraphFormatError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
