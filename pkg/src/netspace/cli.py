"""Command-line interface.

Subcommands: gen, sample, simulate, loss, solve, verify. Data goes to
stdout (or the -o file) and diagnostics to stderr. Exit codes: 0 success,
1 infeasible or failed verification, 2 input error, 3 enumeration guard
exceeded.
"""

import argparse
import math
import sys
from pathlib import Path

from .cascade import lt_run
from .errors import GuardExceeded, InputError
from .formats import (parse_graph_file, parse_instance, parse_solution,
                      write_graph_file, write_instance, write_loss_report,
                      write_solution, write_trace)
from .generate import LABEL_RULES, generate_instance
from .loss import graph_loss
from .solvers import (Infeasible, brute_force_min_seeds, solve_budgeted,
                      solve_trivial, solve_unconstrained, verify_solution)
from .space import mle_graph, sample_graph


def _emit(text: str, output: str | None):
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _read(path: str) -> bytes:
    return Path(path).read_bytes()


def _parse_budget(text: str) -> float:
    try:
        budget = float(text)
    except ValueError:
        raise InputError(f"budget must be a number or 'inf' (got {text!r})") from None
    if math.isnan(budget) or budget < 0.0:
        raise InputError(f"budget must be >= 0 or infinity (got {text!r})")
    return budget


def _parse_seed_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise InputError(f"seeds must be comma-separated integers (got {text!r})") from None


def _cmd_gen(args) -> int:
    space = generate_instance(args.n, args.edge_density, args.support_size,
                              args.label_rule, args.seed, label_p=args.label_p)
    _emit(write_instance(space), args.output)
    return 0


def _cmd_sample(args) -> int:
    space = parse_instance(_read(args.instance))
    _emit(write_graph_file(sample_graph(space, args.seed)), args.output)
    return 0


def _cmd_simulate(args) -> int:
    space = parse_instance(_read(args.instance))
    graph = parse_graph_file(_read(args.graph))
    trace = lt_run(graph, space.thresholds, _parse_seed_list(args.seeds))
    _emit(write_trace(trace), args.output)
    return 0


def _cmd_loss(args) -> int:
    space = parse_instance(_read(args.instance))
    graph = parse_graph_file(_read(args.graph))
    _emit(write_loss_report(graph_loss(space, graph)), args.output)
    return 0


def _cmd_solve(args) -> int:
    space = parse_instance(_read(args.instance))
    if args.graph is not None and args.mode != "oracle":
        raise InputError("--graph is only valid with --mode oracle")
    if args.mode == "trivial":
        outcome = solve_trivial(space)
    elif args.mode == "star":
        outcome = solve_unconstrained(space)
    elif args.mode == "budgeted":
        outcome = solve_budgeted(space, _parse_budget(args.budget))
    else:  # oracle runs on a fixed graph: the modal graph unless one is given
        graph = parse_graph_file(_read(args.graph)) if args.graph else mle_graph(space)
        outcome = brute_force_min_seeds(graph, space)
    if isinstance(outcome, Infeasible):
        print(f"infeasible: {outcome.reason.value}", file=sys.stderr)
        return 1
    trace = lt_run(outcome.graph, space.thresholds, outcome.seeds)
    _emit(write_solution(outcome, trace), args.output)
    return 0


def _cmd_verify(args) -> int:
    space = parse_instance(_read(args.instance))
    solution, _ = parse_solution(_read(args.solution))
    problems = verify_solution(space, solution, _parse_budget(args.budget))
    if problems:
        for problem in problems:
            print(f"invalid: {problem}", file=sys.stderr)
        return 1
    sys.stdout.write("ok\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netspace",
        description="Graph-space sampling, threshold cascades, and seed-set inference.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random instance")
    gen.add_argument("--n", type=int, required=True, help="number of nodes")
    gen.add_argument("--edge-density", type=float, default=0.3,
                     help="probability that a pair gets a distribution (default 0.3)")
    gen.add_argument("--support-size", type=int, default=2,
                     help="weight values per distribution (default 2)")
    gen.add_argument("--label-rule", choices=LABEL_RULES, default="random_p")
    gen.add_argument("--label-p", type=float, default=0.5,
                     help="label probability for random_p (default 0.5)")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("-o", "--output")
    gen.set_defaults(handler=_cmd_gen)

    sample = sub.add_parser("sample", help="draw a realized graph from an instance")
    sample.add_argument("instance")
    sample.add_argument("--seed", type=int, required=True)
    sample.add_argument("-o", "--output")
    sample.set_defaults(handler=_cmd_sample)

    simulate = sub.add_parser("simulate", help="run the threshold cascade from given seeds")
    simulate.add_argument("instance")
    simulate.add_argument("graph")
    simulate.add_argument("--seeds", default="",
                          help="comma-separated seed nodes (empty for none)")
    simulate.add_argument("-o", "--output")
    simulate.set_defaults(handler=_cmd_simulate)

    loss = sub.add_parser("loss", help="score a realized graph against an instance")
    loss.add_argument("instance")
    loss.add_argument("graph")
    loss.add_argument("-o", "--output")
    loss.set_defaults(handler=_cmd_loss)

    solve = sub.add_parser("solve", help="find a seed set and realized graph")
    solve.add_argument("instance")
    solve.add_argument("--mode", choices=("trivial", "star", "budgeted", "oracle"),
                       required=True)
    solve.add_argument("--lambda", dest="budget", default="inf",
                       help="loss budget for --mode budgeted (number or 'inf')")
    solve.add_argument("--graph",
                       help="realized-graph file for --mode oracle (default: modal graph)")
    solve.add_argument("-o", "--output")
    solve.set_defaults(handler=_cmd_solve)

    verify = sub.add_parser("verify", help="re-check a solution against an instance")
    verify.add_argument("instance")
    verify.add_argument("solution")
    verify.add_argument("--lambda", dest="budget", default="inf",
                        help="loss budget the solution must satisfy (number or 'inf')")
    verify.set_defaults(handler=_cmd_verify)
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    try:
        return args.handler(args)
    except GuardExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())
