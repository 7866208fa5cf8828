"""Command line front end: generate, transform, check, solve, simulate,
verify.  Digraphs travel in the arc-list format; results are JSON on
stdout.  Exit codes: 0 success / all assertions hold, 1 a verification
suite found a violation, 2 input or resource error."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .constructions import (
    clique_substitute_all,
    clique_substitute_vertex,
    gen_claw_orientations,
    gen_directed_cycle,
    gen_directed_path,
    gen_projective_plane_incidence_doubled,
    gen_random_digraph,
    subdivide_arcs,
)
from .digraph import format_arc_list, parse_arc_list, to_dot
from .errors import InputError, StateBudgetExceeded
from .harness import RUN_ORDER, config_with_overrides, run_suite, write_reports
from .patterns import find_induced, find_pk_star, find_pk_subgraph
from .solver import DEFAULT_STATE_BUDGET, play_trace, solve


def _read_digraph(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    return parse_arc_list(text, source=str(path))


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_gen(args):
    if args.family == "path":
        d = gen_directed_path(_require(args.k, "--k"))
    elif args.family == "cycle":
        d = gen_directed_cycle(_require(args.n, "--n"))
    elif args.family == "claw":
        index = _require(args.index, "--index")
        claws = gen_claw_orientations()
        if not 0 <= index < len(claws):
            raise InputError(f"--index must be in 0..{len(claws) - 1}")
        d = claws[index]
    elif args.family == "plane":
        d = gen_projective_plane_incidence_doubled(_require(args.q, "--q"))
    else:
        d = gen_random_digraph(
            _require(args.n, "--n"), _require(args.p, "--p"), _require(args.seed, "--seed")
        )
    _emit(format_arc_list(d), args.output)
    return 0


def _require(value, flag):
    if value is None:
        raise InputError(f"{flag} is required for this family")
    return value


def _cmd_transform(args):
    d = _read_digraph(args.input)
    if args.op == "clique-sub-vertex":
        out = clique_substitute_vertex(d, _require(args.vertex, "--vertex"))
    elif args.op == "clique-sub-all":
        out = clique_substitute_all(d)
    else:
        out = subdivide_arcs(d, _require(args.m, "--m"))
    _emit(format_arc_list(out), args.output)
    return 0


def _cmd_check(args):
    d = _read_digraph(args.input)
    given = [x for x in (args.induced, args.pk, args.pk_star) if x is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --induced, --pk, --pk-star")
    if args.induced is not None:
        pattern = _read_digraph(args.induced)
        witness = find_induced(d, pattern)
        payload = {"check": "induced", "pattern": str(args.induced)}
    elif args.pk is not None:
        witness = find_pk_subgraph(d, args.pk)
        payload = {"check": "pk-subgraph", "k": args.pk}
    else:
        witness = find_pk_star(d, args.pk_star)
        payload = {"check": "pk-star", "k": args.pk_star}
    payload["free"] = witness is None
    payload["witness"] = None if witness is None else list(witness.vertices)
    payload["kind"] = None if witness is None else witness.kind
    print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_solve(args):
    d = _read_digraph(args.input)
    k_max = args.k_max if args.k_max is not None else d.n
    found = None
    placement = None
    for k in range(1, k_max + 1):
        result = solve(d, k, args.state_budget)
        cw = next(result.winning_placements(), None)
        if cw is not None:
            found, placement = k, list(cw)
            break
    payload = {
        "n": d.n,
        "k_max": k_max,
        "cop_number": found,
        "placement": placement,
    }
    print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_simulate(args):
    d = _read_digraph(args.input)
    trace = play_trace(d, args.k, args.max_rounds, args.state_budget)
    payload = {
        "k": trace.k,
        "cops_start": list(trace.cops_start),
        "robber_start": trace.robber_start,
        "outcome": trace.outcome,
        "repeat": None if trace.repeat is None else list(trace.repeat),
        "snapshots": [
            {"cops": list(p.cops), "robber": p.robber, "to_move": p.to_move}
            for p in trace.snapshots
        ],
    }
    print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_dot(args):
    _emit(to_dot(_read_digraph(args.input)), args.output)
    return 0


def _cmd_verify(args):
    tokens = list(RUN_ORDER) if args.suite == "all" else [args.suite]
    k_values = None
    if args.k_values is not None:
        try:
            k_values = tuple(int(x) for x in args.k_values.split(","))
        except ValueError:
            raise InputError(f"--k-values must be comma-separated integers") from None
    reports = []
    for token in tokens:
        cfg = config_with_overrides(
            token,
            trials=args.trials,
            n_max=args.n_max,
            p=args.p,
            seed=args.seed,
            state_budget=args.state_budget,
            k_values=k_values,
        )
        reports.append(run_suite(token, cfg))
    write_reports(reports, args.out_dir)
    for report in reports:
        print(
            f"{report.suite}: instances={report.instances_run} "
            f"violations={report.violations_found} errors={len(report.errors)}"
        )
    if any(report.violations for report in reports):
        return 1
    if any(report.errors for report in reports):
        return 2
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="copgame",
        description="Pursuit games on digraphs: generators, transformations, "
        "pattern checks, an exact solver and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated digraph as an arc list")
    p.add_argument("family", choices=("path", "cycle", "claw", "plane", "random"))
    p.add_argument("--k", type=int, help="path vertex count")
    p.add_argument("--n", type=int, help="cycle or random vertex count")
    p.add_argument("--index", type=int, help="claw orientation 0..3")
    p.add_argument("--q", type=int, help="plane order (prime)")
    p.add_argument("--p", type=float, help="random arc probability")
    p.add_argument("--seed", type=int, help="random seed")
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("transform", help="apply a transformation to an arc list")
    p.add_argument("input")
    p.add_argument(
        "--op",
        required=True,
        choices=("clique-sub-vertex", "clique-sub-all", "subdivide"),
    )
    p.add_argument("--vertex", type=int, help="vertex for clique-sub-vertex")
    p.add_argument("--m", type=int, help="subdivision factor")
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("check", help="search one forbidden pattern, emit JSON")
    p.add_argument("input")
    p.add_argument("--induced", help="arc-list file with the pattern digraph")
    p.add_argument("--pk", type=int, help="directed path subgraph length")
    p.add_argument("--pk-star", type=int, help="forward-exact path tuple length")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="compute the cop number, emit JSON")
    p.add_argument("input")
    p.add_argument("--k-max", type=int, help="largest cop count to try (default n)")
    p.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("simulate", help="play out the game, emit a JSON trace")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True, help="cop count")
    p.add_argument("--max-rounds", type=int, help="round cap (default: position count)")
    p.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("dot", help="write Graphviz source for an arc list")
    p.add_argument("input")
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.set_defaults(func=_cmd_dot)

    p = sub.add_parser("verify", help="run verification suites, write CSV reports")
    p.add_argument("--suite", default="all", choices=("all",) + RUN_ORDER)
    p.add_argument("--trials", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--k-values", help="comma-separated, e.g. 3,4")
    p.add_argument("--state-budget", type=int)
    p.add_argument("--out-dir", default="verify_out")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, StateBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
