"""Command-line interface: ``pmcsolver <command> FILE [options]``."""
import argparse
import json
import logging
import sys
from typing import List, Optional

from pmcsolver.config.settings import settings
from pmcsolver.dp.solver import Strategy, solve_fvs, solve_mwis, solve_tw_subgraph
from pmcsolver.errors import InvalidArgument, SolverError
from pmcsolver.graphs.bitset import VertexSet, format_set
from pmcsolver.graphs.graph import total_weight
from pmcsolver.graphs.recognition import classify
from pmcsolver.harness.generators import Instance
from pmcsolver.harness.io import format_family, read_family, read_graph
from pmcsolver.harness.verify import SUITES, random_instances, run_suite
from pmcsolver.separators.minsep import enumerate_minimal_separators, enumerate_pmcs

logger = logging.getLogger(__name__)


def _print_solution(weight: int, solution: VertexSet) -> None:
    print(f"weight {weight}")
    print(f"set {format_set(solution)}".rstrip())


def _cmd_recognize(args: argparse.Namespace) -> int:
    g, _ = read_graph(args.file)
    print(json.dumps(classify(g).to_cli_json(), indent=2))
    return 0


def _cmd_seps(args: argparse.Namespace) -> int:
    g, _ = read_graph(args.file)
    sys.stdout.write(format_family(enumerate_minimal_separators(g, args.budget)))
    return 0


def _cmd_pmcs(args: argparse.Namespace) -> int:
    g, _ = read_graph(args.file)
    records = enumerate_pmcs(g, args.budget)
    sys.stdout.write(format_family([record.omega for record in records]))
    return 0


def _cmd_mwis(args: argparse.Namespace) -> int:
    g, weights = read_graph(args.file)
    solution = solve_mwis(g, weights)
    _print_solution(total_weight(weights, solution), solution)
    return 0


def _cmd_fvs(args: argparse.Namespace) -> int:
    g, _ = read_graph(args.file)
    solution = solve_fvs(g)
    _print_solution(solution.bit_count(), solution)
    return 0


def _cmd_tw_subgraph(args: argparse.Namespace) -> int:
    g, weights = read_graph(args.file)
    name, *rest = args.strategy
    try:
        strategy = Strategy(name)
    except ValueError:
        raise InvalidArgument(f"unknown strategy {name!r}")
    family = None
    if strategy is Strategy.FAMILY:
        if len(rest) != 1:
            raise InvalidArgument("strategy 'family' takes exactly one family file")
        family = read_family(rest[0], g.n)
    elif rest:
        raise InvalidArgument(f"strategy {name!r} takes no file")
    solution = solve_tw_subgraph(g, weights, args.k, strategy, family, args.budget)
    _print_solution(total_weight(weights, solution), solution)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g, weights = read_graph(args.file)
    seed = settings.seed if args.seed is None else args.seed
    max_n = settings.verify_max_n if args.max_n is None else args.max_n
    instances: List[Instance] = [Instance(g, weights, args.file)]
    instances.extend(random_instances(settings.verify_instances, max_n, seed))
    report = run_suite(args.suite, instances, seed=seed, budget=args.budget)
    for failure in report.failures:
        print(f"FAIL {failure}")
    print(
        f"{report.suite}: {report.instances} instances, {report.checks} checks, "
        f"{len(report.failures)} failures, {report.skipped} skipped"
    )
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None, help="Enumeration budget")

    parser = argparse.ArgumentParser(
        prog="pmcsolver",
        description="Exact maximum-weight induced subgraphs of bounded treewidth via PMC containers.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name, handler, help_text in (
        ("recognize", _cmd_recognize, "Report class membership as JSON"),
        ("seps", _cmd_seps, "List minimal separators"),
        ("pmcs", _cmd_pmcs, "List potential maximal cliques"),
        ("mwis", _cmd_mwis, "Maximum-weight independent set (long-hole-free input)"),
        ("fvs", _cmd_fvs, "Minimum feedback vertex set (P5-free input)"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("file", help="Graph file")
        sub.set_defaults(handler=handler)

    tw = commands.add_parser("tw-subgraph", parents=[common], help="Max-weight induced subgraph of treewidth < k")
    tw.add_argument("file", help="Graph file")
    tw.add_argument("--k", type=int, required=True)
    tw.add_argument(
        "--strategy",
        nargs="+",
        default=["all-pmcs"],
        metavar="STRATEGY",
        help="all-pmcs | class-c | family FILE2",
    )
    tw.set_defaults(handler=_cmd_tw_subgraph)

    verify = commands.add_parser("verify", parents=[common], help="Run oracle sweeps")
    verify.add_argument("file", help="Graph file included in the sweep")
    verify.add_argument("--suite", choices=SUITES, required=True)
    verify.add_argument("--seed", type=int, default=None, help="Random seed")
    verify.add_argument("--max-n", type=int, default=None, help="Largest random instance")
    verify.set_defaults(handler=_cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=getattr(logging, settings.log_level),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # usage errors share the invalid-argument code; --help exits 0
        return 0 if e.code == 0 else InvalidArgument.exit_code
    try:
        return args.handler(args)
    except SolverError as e:
        logger.error(f"{args.command} failed: {type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
