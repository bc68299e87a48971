"""CLI entry point for graph-gonality."""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from .config import Config
from .data import load_divisor, load_graph, load_partition_set
from .divisors import (
    Divisor,
    W_r_d,
    is_divisorially_gonal,
    is_equivalent,
    rank,
    reduce,
    transport,
)
from .encoder import ReportEncoder
from .errors import CertificateDisagreement, DegreeCapError, EnumerationCapError, GonalityError, InputError
from .gonality import find_harmonic_to_tree
from .graph import (
    FIXTURES,
    WeightedGraph,
    contract_bridges,
    fixture,
    genus,
    loopless_model,
    random_graph,
    refine,
    stabilize,
    validate,
    weightless_model,
)
from .hurwitz import is_hurwitz_type, rh_genus
from .hyperelliptic import is_hyperelliptic, stable_curve_hyperelliptic_locus

log = logging.getLogger(__name__)

EXIT_DECIDED = 0
EXIT_INPUT_ERROR = 1
EXIT_INCONCLUSIVE = 2

TRANSFORMS: dict[str, Callable[[WeightedGraph], WeightedGraph]] = {
    "loopless": loopless_model,
    "weightless": weightless_model,
    "stabilize": stabilize,
    "contract-bridges": contract_bridges,
}


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """Parse command line arguments."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", "-o", type=Path, help="Write the JSON report here instead of stdout")
    common.add_argument("--seed", "-s", help="Random seed for deterministic output")
    common.add_argument("--quiet", "-q", action="store_true", help="Suppress progress messages")
    common.add_argument("--verbose", "-v", action="store_true", help="Log at INFO level")
    common.add_argument("--timing", action="store_true", help="Add elapsed time to the report")

    parser = argparse.ArgumentParser(
        prog="graph-gonality",
        description="Divisor rank, harmonic morphisms and gonality of weighted multigraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str, graph: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if graph:
            p.add_argument("--graph", "-g", type=Path, required=True, help="Graph JSON file")
        return p

    command("validate", "Report structural violations of a graph")
    command("genus", "Genus of a graph")

    p = command("rank", "Rank of a divisor", graph=False)
    p.add_argument("--graph", "-g", type=Path, help="Graph JSON file (optional if the divisor names one)")
    p.add_argument("--divisor", "-D", type=Path, required=True, help="Divisor JSON file")

    p = command("reduce", "Reduced representative of a divisor on the weightless model", graph=False)
    p.add_argument("--graph", "-g", type=Path, help="Graph JSON file (optional if the divisor names one)")
    p.add_argument("--divisor", "-D", type=Path, required=True, help="Divisor JSON file")
    p.add_argument("--base", "-b", help="Base vertex (default: the first vertex)")

    p = command("equiv", "Linear equivalence of two divisors")
    p.add_argument("--divisor", "-D", type=Path, required=True, help="First divisor JSON file")
    p.add_argument("--other", "-E", type=Path, required=True, help="Second divisor JSON file")

    p = command("wrd", "Classes of degree d and rank at least r")
    p.add_argument("-d", type=int, required=True, help="Degree")
    p.add_argument("-r", type=int, default=1, help="Rank (default: 1)")

    p = command("gonality", "Decide d-gonality of a graph")
    p.add_argument("-d", type=int, required=True, help="Degree")
    p.add_argument(
        "--mode",
        "-m",
        choices=["harmonic", "pseudo", "divisorial"],
        default="harmonic",
        help="Morphism search or divisor classes (default: harmonic)",
    )
    p.add_argument(
        "--hurwitz",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="Require the Hurwitz condition at every vertex (default: on)",
    )
    p.add_argument("--budget", type=int, help="Search node budget")

    p = command("hurwitz", "Decide whether a partition set is of Hurwitz type", graph=False)
    p.add_argument("--input", "-i", type=Path, required=True, help="Partition set JSON file")
    p.add_argument("--witness", action="store_true", help="Search for and report permutations")

    p = command("hyperelliptic", "Decide whether a graph is hyperelliptic")
    p.add_argument("--certificate", action="store_true", help="Report the involution and the quotient morphism")

    command("curve-locus", "Decide whether a stable graph is the dual graph of a hyperelliptic curve")

    p = command("transform", "Apply a structural transformation")
    p.add_argument("operation", choices=[*TRANSFORMS, "refine"], help="Transformation")
    p.add_argument(
        "--plan",
        action="append",
        default=[],
        metavar="EDGE=N",
        help="Subdivide EDGE into N edges (refine only, repeatable)",
    )

    p = command("fixtures", "Emit named fixture graphs", graph=False)
    p.add_argument("name", nargs="?", choices=sorted(FIXTURES), help="Fixture name (default: list the names)")
    p.add_argument("--random", action="store_true", help="Emit a random graph drawn with --seed")

    return parser.parse_args(argv)


def build_config(args: argparse.Namespace) -> Config:
    seed: int | str | None = None
    if args.seed:
        try:
            seed = int(args.seed)
        except ValueError:
            seed = args.seed  # Use as string
    config = Config(seed=seed)
    if getattr(args, "budget", None) is not None:
        config.node_budget = args.budget
    return config


def _progress(args: argparse.Namespace, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def _graph(args: argparse.Namespace, report: ReportEncoder, check: bool = True) -> WeightedGraph:
    _progress(args, f"Loading graph from {args.graph}...")
    g = load_graph(args.graph, check=check)
    report.add_input("graph", g)
    return g


def _divisor(args: argparse.Namespace, report: ReportEncoder, path: Path, name: str = "divisor") -> tuple[WeightedGraph, Divisor]:
    graph = load_graph(args.graph) if args.graph else None
    g, divisor = load_divisor(path, graph)
    report.add_input("graph", g)
    report.add_input(name, divisor)
    return g, divisor


# Commands; each returns an exit code


def run_validate(args: argparse.Namespace, config: Config, report: ReportEncoder) -> int:
    problems = validate(_graph(args, report, check=False))
    report.add("valid", not problems)
    report.add("violations", problems)
    return EXIT_DECIDED


def run_genus(args: argparse.Namespace, config: Config, report: ReportEncoder) -> int:
    report.add("genus", genus(_graph(args, report)))
    return EXIT_DECIDED


def run_rank(args: argparse.Namespace, config: Config, report: ReportEncoder) -> int:
    g, divisor = _divisor(args, report, args.divisor)
    report.add("degree", divisor.degree)
    report.add("rank", rank(g, divisor))
    return EXIT_DECIDED


def run_reduce(args: argparse.Namespace, config: Config, report: ReportEncoder) -> int:
    g, divisor = _divisor(args, report, args.divisor)
    model = weightless_model(g)
    base = args.base or g.vertices[0]
    if base not in g.weights:
        raise InputError(f"unknown base vertex {base!r}", "--base")
    report.add("base", base)
    report.add("reduced", reduce(model, transport(g, divisor), base))
    return EXIT_DECIDED


def run_equiv(args: argparse.Namespace, config: Config, report: ReportEncoder) -> int:
    g = _graph(args, report)
    _, first = load_divisor(args.divisor, g)
    _, second = load_divisor(args.other, g)
    report.add_input("divisor", first)
    report.add_input("other", second)
    report.add("equivalent", is_equivalent(g, first, second))
    return EXIT_DECIDED


def run_wrd(args: argparse.Namespace, config: Config, report: ReportEncoder) -> int:
    g = _graph(args, report)
    classes = W_r_d(g, args.d, args.r, config)
    report.add("count", len(classes))
    report.add("classes", [c.representative for c in classes])
    return EXIT_DECIDED


def run_gonality(args: argparse.Namespace, config: Config, report: ReportEncoder) -> int:
    g = _graph(args, report)
    if args.mode == "divisorial":
        result = is_divisorially_gonal(g, args.d, config)
        report.add("status", "decided")
        report.add("decision", result.decision)
        report.add("witness", result.witness)
        return EXIT_DECIDED
    mode = "harmonic" if args.mode == "harmonic" else "pseudo_harmonic"
    _progress(args, f"Searching degree-{args.d} {mode} morphisms to trees...")
    result = find_harmonic_to_tree(g, args.d, mode, args.hurwitz, config)
    report.add("status", result.status)
    report.add("decision", result.decision)
    report.add("witness", result.witness)
    report.add("vertex_data", result.vertex_data)
    report.add("nodes", result.nodes)
    report.add("trees_tried", result.trees_tried)
    report.add("capped", result.capped)
    return EXIT_INCONCLUSIVE if result.decision is None else EXIT_DECIDED


def run_hurwitz(args: argparse.Namespace, config: Config, report: ReportEncoder) -> int:
    partitions = load_partition_set(args.input)
    report.add_input("partitions", partitions)
    report.add("rh_genus", rh_genus(partitions).value)
    result = is_hurwitz_type(partitions, witness=args.witness, config=config)
    report.add("decision", result.decision)
    report.add("witness", result.witness)
    return EXIT_DECIDED


def run_hyperelliptic(args: argparse.Namespace, config: Config, report: ReportEncoder) -> int:
    g = _graph(args, report)
    result = is_hyperelliptic(g, config)
    report.add("decision", result.decision)
    report.add("method", result.method)
    if args.certificate:
        report.add("divisor", result.witness)
        report.add("involution", result.involution)
        report.add("involutions", result.involutions)
        report.add("quotient_morphism", result.quotient)
    return EXIT_DECIDED


def run_curve_locus(args: argparse.Namespace, config: Config, report: ReportEncoder) -> int:
    result = stable_curve_hyperelliptic_locus(_graph(args, report), config)
    report.add("decision", result.decision)
    report.add("hyperelliptic", result.hyperelliptic)
    report.add("bridge_condition", result.bridges)
    report.add("geometric", result.geometric)
    report.add("consistent", result.consistent)
    return EXIT_DECIDED


def _parse_plan(entries: list[str]) -> dict[str, int]:
    plan = {}
    for entry in entries:
        edge, sep, count = entry.partition("=")
        if not sep or not count.isdigit():
            raise InputError(f"expected EDGE=N, got {entry!r}", "--plan")
        plan[edge] = int(count)
    return plan


def run_transform(args: argparse.Namespace, config: Config, report: ReportEncoder) -> int:
    g = _graph(args, report)
    if args.operation == "refine":
        result = refine(g, _parse_plan(args.plan))
    else:
        result = TRANSFORMS[args.operation](g)
    report.add("graph", result)
    return EXIT_DECIDED


def run_fixtures(args: argparse.Namespace, config: Config, report: ReportEncoder) -> int:
    if args.random:
        report.add("graph", random_graph(config.get_rng()))
    elif args.name:
        report.add("graph", fixture(args.name))
    else:
        report.add("fixtures", sorted(FIXTURES))
    return EXIT_DECIDED


COMMANDS: dict[str, Callable[[argparse.Namespace, Config, ReportEncoder], int]] = {
    "validate": run_validate,
    "genus": run_genus,
    "rank": run_rank,
    "reduce": run_reduce,
    "equiv": run_equiv,
    "wrd": run_wrd,
    "gonality": run_gonality,
    "hurwitz": run_hurwitz,
    "hyperelliptic": run_hyperelliptic,
    "curve-locus": run_curve_locus,
    "transform": run_transform,
    "fixtures": run_fixtures,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point."""
    args = parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s [%(name)s]: %(message)s",
    )
    config = build_config(args)
    echoed = {k: str(v) if isinstance(v, Path) else v for k, v in vars(args).items() if k not in ("out", "quiet", "verbose", "timing")}
    report = ReportEncoder(args.command, echoed, timing=args.timing)

    try:
        code = COMMANDS[args.command](args, config, report)
    except (EnumerationCapError, DegreeCapError) as e:
        log.warning("%s", e)
        report.add("status", "inconclusive")
        report.add("reason", str(e))
        code = EXIT_INCONCLUSIVE
    except CertificateDisagreement as e:
        print(f"Error: deciders disagree: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except GonalityError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    output = report.save(args.out)
    if output is not None:
        _progress(args, f"Report written to {output}")
    return code


if __name__ == "__main__":
    sys.exit(main())
