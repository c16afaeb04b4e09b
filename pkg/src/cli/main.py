import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from dotenv import find_dotenv, load_dotenv

from src.algebra.multisort import BiSeries
from src.algebra.symfunc import SeriesError
from src.enumeration.bicolored import bicolored_counts
from src.enumeration.digraphs import digraph_counts, outdegree_set_counts, outdegree_table
from src.enumeration.graphs import graph_counts, graph_edge_counts
from src.enumeration.requests import CountTable, EnumerationRequest, PreconditionError
from src.oracle.burnside import burnside_count
from src.oracle.families import BudgetExceeded, family_for
from src.species.cycle_index import SortError, cycle_index
from src.species.expr import SetOfSize, SetSpecies, set_of_sizes
from src.species.parser import SpeciesSyntaxError, parse_species
from src.storage.series_io import dumps, save_series, series_to_dict
from src.storage.tables import FORMATS, render
from src.utils.config import Config, ConfigError
from src.utils.logging import get_logger, setup_logging
from src.utils.validation import (
    parse_family,
    parse_int_set,
    parse_nonnegative_int,
    parse_positive_int,
)

logger = get_logger("cli")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_MISMATCH = 4
EXIT_REFUSED = 5


class UsageError(Exception):
    pass


def _positive(what: str) -> Callable[[str], int]:
    def convert(text: str) -> int:
        try:
            return parse_positive_int(text, what)
        except ValueError as e:
            raise argparse.ArgumentTypeError(str(e))

    return convert


def _nonnegative(what: str) -> Callable[[str], int]:
    def convert(text: str) -> int:
        try:
            return parse_nonnegative_int(text, what)
        except ValueError as e:
            raise argparse.ArgumentTypeError(str(e))

    return convert


def _int_set(text: str):
    try:
        return parse_int_set(text, "outdegree set")
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _output_format(args, config: Config, default: Optional[str] = None) -> str:
    fmt = args.format or default or config.get("cli.format", "text")
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return fmt


def _threads(args, config: Config) -> int:
    threads = args.threads if args.threads is not None else config.get("enumeration.threads", 1)
    return max(int(threads), 1)


def cmd_digraphs(args, config) -> int:
    fmt = _output_format(args, config)
    threads = _threads(args, config)
    if args.table is not None:
        if args.loops:
            raise UsageError("--table counts loopless digraphs; drop --loops")
        table = outdegree_table(args.table, args.max_n, threads=threads, progress=args.progress)
    elif args.outdegree_set is not None:
        if args.loops:
            request = EnumerationRequest("digraph", set_of_sizes(args.outdegree_set), loops=True, max_vertices=args.max_n)
            table = digraph_counts(request, threads=threads, progress=args.progress)
        else:
            table = outdegree_set_counts(args.outdegree_set, args.max_n, threads=threads, progress=args.progress)
    else:
        species = SetOfSize(args.outdegree) if args.outdegree is not None else parse_species(args.species)
        request = EnumerationRequest("digraph", species, loops=args.loops, max_vertices=args.max_n)
        table = digraph_counts(request, threads=threads, progress=args.progress)
    _emit(render(table, fmt, args.provenance))
    return EXIT_OK


def cmd_graphs(args, config) -> int:
    fmt = _output_format(args, config)
    species = parse_species(args.species)
    request = EnumerationRequest("graph", species, loops=args.loops, max_vertices=args.max_n, max_y=args.max_y)
    table = graph_edge_counts(request) if args.by_edges else graph_counts(request)
    _emit(render(table, fmt, args.provenance))
    return EXIT_OK


def cmd_bicolored(args, config) -> int:
    fmt = _output_format(args, config)
    species = parse_species(args.species)
    table = bicolored_counts(species, args.max_x, args.max_y)
    _emit(render(table, fmt, args.provenance))
    return EXIT_OK


def cmd_cycle_index(args, config) -> int:
    fmt = _output_format(args, config, default="json")
    if fmt == "csv":
        raise UsageError("cycle-index supports text and json output")
    expr = parse_species(args.expr)
    bound = args.max_degree if args.max_degree is not None else int(config.get("cycle_index.max_degree", 4))
    series = cycle_index(expr, bound, args.max_y)
    if args.output is not None:
        save_series(series, args.output)
    if fmt == "json":
        data = {"expr": expr.pretty()}
        data.update(series_to_dict(series))
        if args.ast:
            data["ast"] = expr.to_dict()
        if args.provenance:
            data["provenance"] = {"two_sort": isinstance(series, BiSeries)}
        _emit(dumps(data) + "\n")
    else:
        lines = [f"# {expr.pretty()}"]
        if isinstance(series, BiSeries):
            lines.append(f"# bound_x = {series.bound_x}, bound_y = {series.bound_y}")
        else:
            lines.append(f"# bound = {series.bound}")
        if args.ast:
            lines.append("# ast: " + json.dumps(expr.to_dict()))
        lines.append(str(series))
        _emit("\n".join(lines) + "\n")
    return EXIT_OK


def _engine_table(name: str, argument, loops: bool, max_n: int) -> CountTable:
    """The engine-side counts for an oracle family."""
    if name == "outdegree":
        return digraph_counts(EnumerationRequest("digraph", SetOfSize(argument), loops=loops, max_vertices=max_n))
    if name == "outdegree-set":
        if loops:
            return digraph_counts(EnumerationRequest("digraph", set_of_sizes(argument), loops=True, max_vertices=max_n))
        return outdegree_set_counts(argument, max_n)
    if name == "relation":
        return digraph_counts(EnumerationRequest("digraph", SetSpecies(), loops=True, max_vertices=max_n))
    if name == "digraphs":
        return digraph_counts(EnumerationRequest("digraph", SetSpecies(), loops=loops, max_vertices=max_n))
    if name == "regular":
        return graph_counts(EnumerationRequest("graph", SetOfSize(argument), loops=loops, max_vertices=max_n))
    raise UsageError(f"unknown family {name!r}")


def _family_argument(name: str, raw: Optional[str]):
    needs = {"outdegree": "an outdegree", "regular": "a degree", "outdegree-set": "a set of outdegrees"}
    if name in needs:
        if raw is None:
            raise UsageError(f"family {name} needs {needs[name]}, e.g. {name}:2")
        try:
            if name == "outdegree-set":
                return parse_int_set(raw, "outdegree set")
            return parse_nonnegative_int(raw, name)
        except ValueError as e:
            raise UsageError(str(e))
    if raw is not None:
        raise UsageError(f"family {name} takes no argument")
    if name not in ("relation", "digraphs"):
        raise UsageError(f"unknown family {name!r}")
    return None


def cmd_verify(args, config) -> int:
    fmt = _output_format(args, config)
    try:
        name, raw = parse_family(args.family)
    except ValueError as e:
        raise UsageError(str(e))
    argument = _family_argument(name, raw)
    if args.min_n > args.max_n:
        raise UsageError(f"--min-n {args.min_n} is larger than --max-n {args.max_n}")
    budget = config.oracle_budget(args.budget)
    exhaustive = args.exhaustive or bool(config.get("oracle.exhaustive", False))

    engine = _engine_table(name, argument, args.loops, args.max_n).as_dict()
    report = []
    for n in range(args.min_n, args.max_n + 1):
        family = family_for(name, argument, n, args.loops)
        oracle = burnside_count(family, budget=budget, exhaustive=exhaustive)
        ours = engine[(n,)]
        report.append({"family": args.family, "n": n, "oracle": oracle, "engine": ours, "status": "pass" if oracle == ours else "FAIL"})
        logger.info(f"{family.name}, n = {n}: oracle {oracle}, engine {ours}")

    if fmt == "json":
        _emit(json.dumps([dict(r, oracle=str(r["oracle"]), engine=str(r["engine"])) for r in report], indent=2) + "\n")
    elif fmt == "csv":
        lines = ["family,n,oracle,engine,status"] + [
            f"{r['family']},{r['n']},{r['oracle']},{r['engine']},{r['status']}" for r in report
        ]
        _emit("\n".join(lines) + "\n")
    else:
        _emit("".join(f"{r['family']} n={r['n']}: oracle {r['oracle']}, engine {r['engine']} {r['status']}\n" for r in report))
    failures = [r for r in report if r["status"] != "pass"]
    if failures:
        logger.error(f"{len(failures)} mismatches for {args.family}")
        return EXIT_MISMATCH
    return EXIT_OK


def _emit(text: str):
    sys.stdout.write(text)
    sys.stdout.flush()


def _add_common(parser: argparse.ArgumentParser, suppress: bool):
    """Options accepted both before and after the subcommand."""
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    parser.add_argument("--config", type=Path, default=default(None), help="Path to settings.json")
    parser.add_argument("--verbose", "-v", action="store_true", default=default(False), help="Enable verbose logging")
    parser.add_argument("--log-file", type=Path, default=default(None), help="Also write logs to this file")
    parser.add_argument("--format", choices=FORMATS, default=default(None), help="Output format")
    parser.add_argument("--provenance", action="store_true", default=default(False), help="Include bounds and solver metadata")
    parser.add_argument("--threads", type=_positive("--threads"), default=default(None), help="Worker threads for per-row computation")
    parser.add_argument("--progress", action="store_true", default=default(False), help="Show a progress bar on stderr")
    parser.add_argument("--budget", type=_positive("--budget"), default=default(None), help="Oracle budget in elementary checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="species",
        description="Cycle-index series of combinatorial species and graph enumeration",
    )
    _add_common(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    dig = subparsers.add_parser("digraphs", parents=[common], help="Count unlabeled G-digraphs")
    source = dig.add_mutually_exclusive_group(required=True)
    source.add_argument("--outdegree", type=_nonnegative("--outdegree"), help="Every vertex has outdegree K")
    source.add_argument("--outdegree-set", type=_int_set, help="Outdegrees from a set such as 1,3,4")
    source.add_argument("--species", type=str, help="Out-set species expression")
    source.add_argument("--table", type=_positive("--table"), help="Outdegrees 1..K, one column each")
    dig.add_argument("--loops", action="store_true", help="Allow loops")
    dig.add_argument("--max-n", type=_positive("--max-n"), required=True, help="Largest vertex count")

    gr = subparsers.add_parser("graphs", parents=[common], help="Count unlabeled G-graphs (multigraphs)")
    gr.add_argument("--species", type=str, required=True, help="Half-edge species expression (strictly finite)")
    gr.add_argument("--loops", action="store_true", help="Allow loops")
    gr.add_argument("--max-n", type=_positive("--max-n"), required=True, help="Largest vertex count")
    gr.add_argument("--max-y", type=_nonnegative("--max-y"), help="Half-edge bound (default: degree of G times max-n)")
    gr.add_argument("--by-edges", action="store_true", help="Split counts by number of edges (loops allowed only)")

    bi = subparsers.add_parser("bicolored", parents=[common], help="Count bicolored G-graphs by vertices and edges")
    bi.add_argument("--species", type=str, required=True, help="Half-edge species expression")
    bi.add_argument("--max-x", type=_positive("--max-x"), required=True, help="Largest vertex count")
    bi.add_argument("--max-y", type=_nonnegative("--max-y"), required=True, help="Largest edge count")

    ci = subparsers.add_parser("cycle-index", parents=[common], help="Print the cycle index of an expression")
    ci.add_argument("--expr", type=str, required=True, help="Species expression")
    ci.add_argument("--max-degree", type=_nonnegative("--max-degree"), help="Degree bound (x sort)")
    ci.add_argument("--max-y", type=_nonnegative("--max-y"), help="Degree bound of the y sort (two-sort result)")
    ci.add_argument("--ast", action="store_true", help="Include the parsed expression tree")
    ci.add_argument("--output", type=Path, help="Also save the series as JSON to this path")

    ver = subparsers.add_parser("verify", parents=[common], help="Compare engine counts with brute-force orbit counts")
    ver.add_argument("--family", type=str, required=True, help="outdegree:K, outdegree-set:S, relation, digraphs or regular:K")
    ver.add_argument("--loops", action="store_true", help="Allow loops")
    ver.add_argument("--max-n", type=_positive("--max-n"), required=True, help="Largest vertex count")
    ver.add_argument("--min-n", type=_positive("--min-n"), default=1, help="Smallest vertex count")
    ver.add_argument("--exhaustive", action="store_true", help="Sum over every permutation instead of one per cycle type")

    return parser


COMMANDS: Dict[str, Callable] = {
    "digraphs": cmd_digraphs,
    "graphs": cmd_graphs,
    "bicolored": cmd_bicolored,
    "cycle-index": cmd_cycle_index,
    "verify": cmd_verify,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one subcommand and return its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    setup_logging(verbose=args.verbose, log_file=args.log_file)
    load_dotenv(find_dotenv(usecwd=True))

    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        config = Config(args.config)
        return COMMANDS[args.command](args, config)
    except (SpeciesSyntaxError, UsageError, ConfigError) as e:
        logger.error(f"Usage error: {e}")
        return EXIT_USAGE
    except BudgetExceeded as e:
        logger.error(f"Oracle refused: {e}")
        return EXIT_REFUSED
    except (PreconditionError, SortError, SeriesError) as e:
        logger.error(f"Precondition failed: {e}")
        return EXIT_PRECONDITION


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
