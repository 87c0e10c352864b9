"""
Command-line entry point. Every subcommand becomes a task routed through the
orchestrator, so the CLI and the HTTP service share one code path.

    python cli.py run --graph frb30-15-1.mtx --format matrix-market --complement --uniform 10 --r 20 --l 2
    python cli.py sweep --standin frb30-15-1 --complement --degree-partition 10 --caps 6,1,1,1,1,1,1,1,1,1 --r 20 --algo common --csv out.csv --plot out.svg
    python cli.py bound --g 450 10 20
    python cli.py bound --partition-bound 300,150 6,4 --r 20
    python cli.py oracle --weights 4,3,2,1 --uniform 2 --r 2 --alpha 1/2
    python cli.py check --suite uniform_exact --trials 50
    python cli.py fixtures cyclic --n 6 --s 2 --r 3
"""
import argparse
import asyncio
import json
import sys

from agents.fixture_agent import FIXTURES
from data.connectors import BENCHMARK_GRAPHS, EDGE_LIST, FORMATS
from harness.suites import SUITES
from orchestrator.instance import orchestrator


def int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def add_graph_args(parser: argparse.ArgumentParser, required: bool = True) -> None:
    source = parser.add_mutually_exclusive_group(required=required)
    source.add_argument("--graph", help="graph file (1-based vertex ids)")
    source.add_argument("--standin", choices=sorted(BENCHMARK_GRAPHS), help="random graph with the density of a benchmark graph")
    parser.add_argument("--format", choices=FORMATS, default=EDGE_LIST)
    parser.add_argument("--complement", action="store_true", help="use the complement graph")
    parser.add_argument("--seed", type=int, default=0, help="seed of the stand-in graph")


def add_constraint_args(parser: argparse.ArgumentParser, required: bool = True) -> None:
    constraint = parser.add_mutually_exclusive_group(required=required)
    constraint.add_argument("--uniform", type=int, metavar="K")
    constraint.add_argument("--partition", metavar="FILE", help="partition specification, one 'cap: ids' line per block")
    constraint.add_argument("--degree-partition", type=int, metavar="k", help="k blocks of vertices sorted by degree")
    constraint.add_argument("--intersect", nargs="+", metavar="SPEC", help="uniform:K, partition:FILE or degree:k:caps")
    parser.add_argument("--caps", type=int_list, help="caps of the degree partition, e.g. 6,1,1")
    parser.add_argument("--reverse-degree-order", action="store_true", help="put the highest-degree vertices in block 1")


def add_algorithm_args(parser: argparse.ArgumentParser, sweep: bool) -> None:
    parser.add_argument("--algo", choices=("common", "replimit"))
    parser.add_argument("--r", type=int, required=True, help="number of solutions")
    param = parser.add_mutually_exclusive_group(required=not sweep)
    param.add_argument("--b", type=int, help="common elements (common-element greedy)")
    param.add_argument("--l", type=int, help="representation limit (representation-limit greedy)")
    if sweep:
        param.add_argument("--all", action="store_true", help="sweep the full parameter range (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Diverse near-optimal solutions under matroid constraints.")
    parser.add_argument("--json", action="store_true", help="print the full result as JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one greedy algorithm")
    add_graph_args(run)
    add_constraint_args(run)
    add_algorithm_args(run, sweep=False)

    sweep = sub.add_parser("sweep", help="sweep b or l and write CSV and plot")
    add_graph_args(sweep)
    add_constraint_args(sweep)
    add_algorithm_args(sweep, sweep=True)
    sweep.add_argument("--csv", help="output CSV path")
    sweep.add_argument("--plot", help="output SVG path")
    sweep.add_argument("--plot-kind", choices=("objective", "diversity"), default="objective")
    sweep.add_argument("--best-known", metavar="FILE", help="CSV of graph,constraint,best_known")
    sweep.add_argument("--timings", action="store_true", help="record wall time per row in the ms column")

    bound = sub.add_parser("bound", help="evaluate diversity bounds")
    which = bound.add_mutually_exclusive_group()
    which.add_argument("--g", nargs=3, type=int, metavar=("A", "B", "C"))
    which.add_argument("--ratio", nargs=4, type=int, metavar=("N", "K", "B", "R"))
    which.add_argument("--disjoint", nargs=4, type=int, metavar=("N", "S", "R", "K"))
    which.add_argument("--suggest", nargs=3, type=int, metavar=("N", "RANK", "R"))
    which.add_argument("--partition-bound", nargs=2, type=int_list, metavar=("SIZES", "CAPS"), help="per-block bound, e.g. 4,4 2,1 (needs --r)")
    which.add_argument("--g-plot", metavar="PATH")
    bound.add_argument("--pathological", action="store_true")
    add_graph_args(bound, required=False)
    add_constraint_args(bound, required=False)
    bound.add_argument("--r", type=int)

    oracle = sub.add_parser("oracle", help="exact ground truth on a small instance")
    source = oracle.add_mutually_exclusive_group(required=True)
    source.add_argument("--weights", type=int_list, help="modular objective weights")
    source.add_argument("--graph", help="graph file for a coverage objective")
    oracle.add_argument("--format", choices=FORMATS, default=EDGE_LIST)
    oracle.add_argument("--complement", action="store_true")
    add_constraint_args(oracle)
    oracle.add_argument("--r", type=int, default=2)
    oracle.add_argument("--alpha", default="0", help="approximation threshold, e.g. 1/2")

    check = sub.add_parser("check", help="run the seeded verification suites")
    check.add_argument("--suite", action="append", choices=sorted(SUITES), help="suite to run (repeatable; default all)")
    check.add_argument("--trials", type=int)
    check.add_argument("--seed", type=int, default=0)

    fixtures = sub.add_parser("fixtures", help="constructed instances with known diversity")
    fixtures.add_argument("fixture", choices=FIXTURES)
    for name in ("n", "s", "r", "l", "K", "count"):
        fixtures.add_argument(f"--{name}", type=int)
    fixtures.add_argument("--alpha", default="1")
    fixtures.add_argument("--name", choices=sorted(BENCHMARK_GRAPHS), help="benchmark graph for the stand-in")
    fixtures.add_argument("--out", help="output path for the stand-in edge list")
    fixtures.add_argument("--seed", type=int, default=0)
    return parser


def _check_caps(parser, args) -> None:
    if getattr(args, "degree_partition", None) is not None and args.caps is None:
        parser.error("--degree-partition needs --caps")


def constraint_specs(args) -> list[str]:
    if args.uniform is not None:
        return [f"uniform:{args.uniform}"]
    if args.partition:
        return [f"partition:{args.partition}"]
    if args.degree_partition is not None:
        spec = f"degree:{args.degree_partition}:{','.join(map(str, args.caps))}"
        return [spec + ":reverse" if args.reverse_degree_order else spec]
    return list(args.intersect or [])


def experiment_payload(args) -> dict:
    return {
        "graph": args.graph,
        "standin": args.standin,
        "seed": args.seed,
        "format": args.format,
        "complement": args.complement,
        "uniform": args.uniform,
        "partition": args.partition,
        "degree_partition": args.degree_partition,
        "caps": args.caps,
        "reverse_degree_order": args.reverse_degree_order,
        "intersect": args.intersect,
        "r": args.r,
    }


def _algorithm(parser, args) -> str:
    if args.b is not None and args.algo == "replimit" or args.l is not None and args.algo == "common":
        parser.error("--b belongs to --algo common and --l to --algo replimit")
    if args.algo:
        return args.algo
    return "replimit" if args.l is not None else "common"


def build_task(parser: argparse.ArgumentParser, args) -> dict:
    _check_caps(parser, args)
    if args.command == "run":
        payload = experiment_payload(args) | {"algo": _algorithm(parser, args), "param": args.b if args.b is not None else args.l}
        return {"type": "run", "payload": payload}
    if args.command == "sweep":
        payload = experiment_payload(args) | {
            "algo": _algorithm(parser, args),
            "csv_path": args.csv,
            "plot_path": args.plot,
            "plot_kind": args.plot_kind,
            "best_known_path": args.best_known,
            "record_timings": args.timings,
        }
        if args.b is not None or args.l is not None:
            payload["params"] = [args.b if args.b is not None else args.l]
        return {"type": "sweep", "payload": payload}
    if args.command == "bound":
        if args.g:
            return {"type": "bound", "payload": dict(zip(("a", "b", "c"), args.g), kind="g")}
        if args.ratio:
            return {"type": "bound", "payload": dict(zip(("n", "K", "b", "r"), args.ratio), kind="ratio")}
        if args.disjoint:
            return {"type": "bound", "payload": dict(zip(("n", "s", "r", "k"), args.disjoint), kind="disjoint")}
        if args.suggest:
            payload = dict(zip(("n", "rank", "r"), args.suggest), kind="suggest", pathological=args.pathological)
            return {"type": "bound", "payload": payload}
        if args.partition_bound:
            if args.r is None:
                parser.error("--partition-bound needs --r")
            sizes, caps = args.partition_bound
            return {"type": "bound", "payload": {"kind": "partition", "sizes": sizes, "caps": caps, "r": args.r}}
        if args.g_plot:
            return {"type": "bound", "payload": {"kind": "g_plot", "path": args.g_plot}}
        if not (args.graph or args.standin) or not constraint_specs(args) or args.r is None:
            parser.error("bound needs --g, --ratio, --disjoint, --suggest, --partition-bound, --g-plot, or a graph, a constraint and --r")
        return {"type": "bound", "payload": experiment_payload(args) | {"kind": "instance"}}
    if args.command == "oracle":
        payload = {
            "weights": args.weights,
            "graph": args.graph,
            "format": args.format,
            "complement": args.complement,
            "constraints": constraint_specs(args),
            "r": args.r,
            "alpha": args.alpha,
        }
        return {"type": "oracle", "payload": payload}
    if args.command == "check":
        return {"type": "check", "payload": {"suites": args.suite, "trials": args.trials, "seed": args.seed}}
    payload = {"fixture": args.fixture, "alpha": args.alpha, "name": args.name, "out": args.out, "seed": args.seed}
    payload |= {name: getattr(args, name) for name in ("n", "s", "r", "l", "K", "count") if getattr(args, name) is not None}
    return {"type": "fixtures", "payload": payload}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    task = build_task(parser, args)
    result = asyncio.run(orchestrator.handle_task(task))
    if "error" in result:
        print(f"error: {result['error']}", file=sys.stderr)
        if result.get("details"):
            print(result["details"], file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(result, indent=2, default=str))
    else:
        print(result["report"])
    if args.command == "check" and not result["data"]["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
