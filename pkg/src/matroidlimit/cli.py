"""Command line interface: ``matroidlimit <verb> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import graph as graphmod
from .experiments import ExperimentConfig, run_convergence
from .generators import FAMILIES, generate
from .graph import load_graph, normalized_rank
from .nets import DEFAULT_WINDOW, Decoration, NetRegistry, decorate, greedy_net
from .omega import ball_distribution
from .quotient import BudgetExceeded, dq_truncated, quotient_set
from .verify import verify_suite


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _window(text: str | None):
    if not text:
        return DEFAULT_WINDOW
    return tuple(tuple(int(x) for x in part.split(",")) for part in text.split(";") if part)


def _common(p: argparse.ArgumentParser, *names: str) -> None:
    if "seed" in names:
        p.add_argument("--seed", type=int, default=0)
    if "budget" in names:
        p.add_argument("--budget", type=int, default=10**7, help="max colorings to enumerate")
    if "k" in names:
        p.add_argument("--k", type=int, default=2)
    if "K" in names:
        p.add_argument("--K", type=int, default=2, help="truncation level of d_Q")
    if "mode" in names:
        p.add_argument("--mode", choices=("exact", "sampled", "auto"), default="exact")
        p.add_argument("--samples", type=int, default=10**5)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")


def cmd_gen(args) -> int:
    g = generate(args.family, args.size, args.degree, args.seed)
    text = graphmod.to_json(g) if args.format == "json" else graphmod.to_edgelist(g)
    _emit(text, args.out)
    return 0


def cmd_rank(args) -> int:
    g = load_graph(args.graph)
    f = range(g.edge_count) if args.edges is None else [int(x) for x in args.edges.split(",") if x]
    r = normalized_rank(g, f)
    _emit(f"{r.numerator}/{r.denominator}\n", args.out)
    return 0


def cmd_qset(args) -> int:
    g = load_graph(args.graph)
    qs = quotient_set(g, args.k, args.mode, args.budget, args.samples, args.seed)
    if args.format == "json":
        _emit(qs.to_json(), args.out)
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"A{mask}" for mask in range(2**args.k)])
        for p in qs.points:
            w.writerow(p.to_json())
        _emit(buf.getvalue(), args.out)
    return 0


def cmd_dq(args) -> int:
    g1, g2 = load_graph(args.graph), load_graph(args.other)
    iv = dq_truncated(g1, g2, args.K, args.mode, args.budget, args.samples, args.seed)
    if args.format == "json":
        _emit(iv.to_json(), args.out)
    else:
        _emit(f"lower,upper,K,mode,estimate\n{iv.lower!r},{iv.upper!r},{iv.K},{iv.mode},{iv.estimate}\n", args.out)
    return 0


def cmd_net(args) -> int:
    g = load_graph(args.graph)
    if args.greedy:
        members = greedy_net(g, args.k, args.n, args.samples, args.seed)
        _emit(json.dumps({"k": args.k, "n": args.n, "colorings": [list(c) for c in members]}) + "\n", args.out)
        return 0
    try:
        reg = NetRegistry.load(args.registry)
    except FileNotFoundError:
        reg = NetRegistry(seed=args.seed)
    net = reg.build(g, args.k, args.n, args.budget)
    reg.save(args.registry)
    sys.stderr.write(f"net (k={args.k}, n={args.n}): size {len(net)}, {len(net.distinct())} distinct colorings\n")
    return 0


def cmd_decorate(args) -> int:
    g = load_graph(args.graph)
    reg = NetRegistry.load(args.registry)
    _emit(decorate(g, reg, _window(args.window)).to_json(), args.out)
    return 0


def cmd_balls(args) -> int:
    g = load_graph(args.graph)
    if args.registry:
        dec = decorate(g, NetRegistry.load(args.registry), _window(args.window))
    else:
        dec = Decoration.constant(g.edge_count)
    _emit(ball_distribution(g, dec, args.r, args.m).to_json(), args.out)
    return 0


def cmd_converge(args) -> int:
    if args.config:
        with open(args.config) as fh:
            cfg = ExperimentConfig.from_json(fh.read())
    else:
        cfg = ExperimentConfig(
            family=args.family,
            sizes=[int(s) for s in args.sizes.split(",")],
            K=args.K, mode=args.mode, budget=args.budget,
            samples=args.samples, seed=args.seed, degree=args.degree,
        )
    report = run_convergence(cfg)
    if args.out:
        report.write(args.out)
    else:
        sys.stdout.write(report.to_csv() if args.format == "csv" else report.to_json())
    for failure in report.invariant_failures:
        sys.stderr.write(f"invariant check failed: {failure}\n")
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    result = verify_suite(args.budget, seed=args.seed)
    _emit(result.table() + "\n", args.out)
    return result.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matroidlimit", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--degree", type=int, default=None)
    _common(p, "seed")
    p.set_defaults(func=cmd_gen)
    p.set_defaults(format="edgelist")
    p._option_string_actions["--format"].choices = ("json", "edgelist")

    p = sub.add_parser("rank", help="normalized rank of an edge subset")
    p.add_argument("--graph", required=True)
    p.add_argument("--edges", default=None, help="comma-separated edge ids (default: all)")
    _common(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("qset", help="k-quotient set of a graph")
    p.add_argument("--graph", required=True)
    _common(p, "seed", "budget", "k", "mode")
    p.set_defaults(func=cmd_qset)

    p = sub.add_parser("dq", help="truncated quotient distance between two graphs")
    p.add_argument("--graph", required=True)
    p.add_argument("--other", required=True)
    _common(p, "seed", "budget", "K", "mode")
    p.set_defaults(func=cmd_dq)

    p = sub.add_parser("net", help="build a 2^-n net into a registry")
    p.add_argument("--graph", required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--registry", default="registry.json")
    p.add_argument("--greedy", action="store_true", help="sampled farthest-point net instead")
    p.add_argument("--samples", type=int, default=10**4)
    _common(p, "seed", "budget", "k")
    p.set_defaults(func=cmd_net)

    p = sub.add_parser("decorate", help="truncated decoration of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--registry", required=True)
    p.add_argument("--window", default=None, help="e.g. '1,1;2,1;2,2'")
    _common(p)
    p.set_defaults(func=cmd_decorate)

    p = sub.add_parser("balls", help="rooted ball distribution")
    p.add_argument("--graph", required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--registry", default=None)
    p.add_argument("--window", default=None)
    _common(p)
    p.set_defaults(func=cmd_balls)

    p = sub.add_parser("converge", help="convergence experiment")
    p.add_argument("--config", default=None, help="ExperimentConfig JSON")
    p.add_argument("--family", choices=FAMILIES, default="cycle")
    p.add_argument("--sizes", default="4,8,16")
    p.add_argument("--degree", type=int, default=None)
    _common(p, "seed", "budget", "K", "mode")
    p.set_defaults(func=cmd_converge, mode="auto", format="csv")

    p = sub.add_parser("verify", help="run oracle cross-checks")
    _common(p, "seed")
    p.add_argument("--budget", type=int, default=10**6)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceeded, ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
