"""Command-line entry point.

Exit codes: 0 yes/success, 1 no, 2 error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import generators
from .coloring import (
    CertificateFormatError,
    MatchingCut,
    format_certificate,
    matching_cut_violation,
    parse_certificate,
)
from .exact import (
    DEFAULT_BUDGET,
    DisconnectedGraphError,
    Indeterminate,
    SizeLimitError,
    solve_branch,
    solve_bruteforce,
)
from .graph import GraphFormatError, components, parse_graph, serialize_graph
from .p5free import NotP5FreeError, find_dominating_structure, is_pt_free, longest_induced_path, solve_p5free
from .reduction import (
    FormulaFormatError,
    format_formula,
    format_roles,
    parse_formula,
    reduce_to_graph,
    reduction_stats,
    validate_restricted,
)

EXIT_YES, EXIT_NO, EXIT_ERROR, EXIT_INDETERMINATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_ERROR


def _guess_format(text: str) -> str:
    for line in text.splitlines():
        tokens = line.split()
        if not tokens or tokens[0] in ("c", "#"):
            continue
        return "dimacs" if tokens[0] == "p" else "edgelist"
    return "edgelist"


def _read_graph(path: str, fmt: str):
    text = Path(path).read_text()
    return parse_graph(text, _guess_format(text) if fmt == "auto" else fmt)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _pick_solver(g, args):
    algo = args.algo
    if args.precheck_p5:
        p5 = is_pt_free(g, 5, budget=args.budget)
        if algo == "p5" and not p5:
            raise UsageError("graph contains an induced P5; --algo p5 does not apply")
        if algo == "auto":
            algo = "p5" if p5 else "branch"
    elif algo == "auto":
        algo = "branch"
    if algo == "brute":
        return algo, solve_bruteforce
    if algo == "p5":
        return algo, solve_p5free
    return algo, lambda h: solve_branch(h, budget=args.budget)


def cmd_solve(args) -> int:
    g = _read_graph(args.graph, args.format)
    if args.per_component:
        parts = []
        any_cut = False
        for k, block in enumerate(components(g), 1):
            sub, labels = g.induced_subgraph(block)
            algo, solve = _pick_solver(sub, args)
            out = solve(sub)
            any_cut |= out.has_cut
            parts.append(f"c component {k} algo={algo}: {' '.join(map(str, labels))}\n")
            mc = out.certificate
            if mc is not None:
                mc = MatchingCut(
                    frozenset((labels[u], labels[v]) for u, v in mc.cut),
                    frozenset(labels[v] for v in mc.side_red),
                    frozenset(labels[v] for v in mc.side_blue),
                )
            parts.append(format_certificate(mc))
            if args.stats:
                sys.stderr.write(f"component={k}\n" + out.stats_lines())
        _write("".join(parts), args.out)
        return EXIT_YES if any_cut else EXIT_NO

    algo, solve = _pick_solver(g, args)
    out = solve(g)
    _write(format_certificate(out.certificate), args.out)
    if args.stats:
        sys.stderr.write(f"algo={algo}\n" + out.stats_lines())
    return EXIT_YES if out.has_cut else EXIT_NO


def cmd_reduce(args) -> int:
    f = parse_formula(Path(args.formula).read_text())
    problems = validate_restricted(f)
    if problems:
        for p in problems:
            print(f"violation: {p}", file=sys.stderr)
        return EXIT_ERROR
    lg = reduce_to_graph(f, args.hub - 1)
    fmt = "edgelist" if args.format == "auto" else args.format
    _write(serialize_graph(lg.graph, fmt), args.out)
    roles_path = args.roles or (args.out + ".roles" if args.out else None)
    if roles_path:
        Path(roles_path).write_text(format_roles(lg))
    stats = reduction_stats(f)
    print(stats.line(), file=sys.stdout if args.out else sys.stderr)
    return EXIT_YES


def cmd_generate(args) -> int:
    kind, n, seed = args.kind, args.n, args.seed
    if n is None:
        raise UsageError("--n is required")
    if kind == "formula":
        _write(format_formula(generators.random_formula(n, seed)), args.out)
        return EXIT_YES
    if kind == "gnp":
        g = generators.gnp_graph(n, args.p, seed)
    elif kind == "cograph":
        g = generators.random_cograph(n, seed, connected=args.connected)
    elif kind == "cycle":
        g = generators.cycle_graph(n)
    elif kind == "path":
        g = generators.path_graph(n)
    else:
        g = generators.complete_graph(n)
    fmt = "edgelist" if args.format == "auto" else args.format
    _write(serialize_graph(g, fmt), args.out)
    return EXIT_YES


def cmd_check(args) -> int:
    g = _read_graph(args.graph, args.format)
    mc = parse_certificate(Path(args.certificate).read_text())
    if mc is None:
        print("certificate claims NONE; nothing to verify")
        return EXIT_NO
    reason = matching_cut_violation(g, mc)
    if reason is None:
        print("valid matching-cut")
        return EXIT_YES
    print(f"invalid: {reason}")
    return EXIT_NO


def cmd_recognize(args) -> int:
    g = _read_graph(args.graph, args.format)
    res = longest_induced_path(g, cap=args.t, budget=args.budget)
    if res.length >= args.t:
        print(f"contains induced P{args.t}: {' '.join(map(str, res.path[:args.t]))}")
        return EXIT_NO
    print(f"P{args.t}-free (longest induced path has {res.length} vertices)")
    return EXIT_YES


def cmd_dominate(args) -> int:
    g = _read_graph(args.graph, args.format)
    dom = find_dominating_structure(g)
    print(f"{dom.kind.value} {' '.join(map(str, dom.vertices))}")
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matchcut", description="Exact matching-cut workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("graph")
        p.add_argument("--format", choices=("auto", "edgelist", "dimacs"), default="auto")

    p = sub.add_parser("solve", help="decide matching-cut and write a certificate")
    graph_input(p)
    p.add_argument("--algo", choices=("auto", "brute", "branch", "p5"), default="auto")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0, help="accepted for uniformity; solvers are deterministic")
    p.add_argument("--per-component", action="store_true")
    p.add_argument("--precheck-p5", action="store_true")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="compile a restricted 1-in-3 formula to a graph")
    p.add_argument("formula")
    p.add_argument("--hub", type=int, default=1, help="1-based hub variable")
    p.add_argument("--format", choices=("auto", "edgelist", "dimacs"), default="auto")
    p.add_argument("--out")
    p.add_argument("--roles", help="role sidecar path (default: <out>.roles)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("generate", help="write a seeded instance")
    p.add_argument("kind", choices=("gnp", "cograph", "cycle", "path", "complete", "formula"))
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--connected", action="store_true", help="cograph: force a join at the root")
    p.add_argument("--format", choices=("auto", "edgelist", "dimacs"), default="auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="verify a certificate against a graph")
    graph_input(p)
    p.add_argument("certificate")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("recognize", help="test P_t-freeness")
    graph_input(p)
    p.add_argument("--t", type=int, default=5)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("dominate", help="find a dominating K1/K2/P3/clique")
    graph_input(p)
    p.set_defaults(func=cmd_dominate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Indeterminate as exc:
        print(f"indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except (
        GraphFormatError,
        CertificateFormatError,
        FormulaFormatError,
        DisconnectedGraphError,
        SizeLimitError,
        NotP5FreeError,
        UsageError,
        OSError,
        ValueError,
    ) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
