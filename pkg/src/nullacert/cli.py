"""Command-line front end: analyze graphs, run censuses, join graphs.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 usage error, 2 input parse error, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Iterator

from . import report as rpt
from .errors import CapacityError, Graph6Error
from .graphs import (
    Graph,
    complete_graph,
    enumerate_nonisomorphic,
    hajos_join,
    is_4critical,
    iter_graph6,
    moser_spindle,
    parse_graph6,
    wheel,
    write_graph6,
)
from .nulla import DEFAULT_DEGREE_CAP, census, nulla_degree
from .pathcover import path_cover_search, short_cycle_obstruction

GENERATORS = ("k4", "moser-spindle", "wheel:N")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we map usage to 1
        raise UsageError(message)


@dataclass
class RunConfig:
    cap: int = DEFAULT_DEGREE_CAP
    schedule: str = "mod3"
    workers: int = 1
    fmt: str = "table"
    bit_cap: int | None = None
    timings: bool = False


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--cap", type=int, default=DEFAULT_DEGREE_CAP,
                     help="maximum certificate degree to try (default 4)")
    sub.add_argument("--schedule", choices=("mod3", "all"), default="mod3",
                     help="degree escalation schedule (default mod3: 1, 4, ...)")
    sub.add_argument("--format", dest="fmt", choices=("table", "csv", "json"),
                     default="table", help="output format (default table)")
    sub.add_argument("--mem-cap", type=int, default=None, metavar="BYTES",
                     help="cap on certificate-system memory (bytes)")
    sub.add_argument("--timings", action="store_true",
                     help="include measured wall times in the output "
                          "(off by default so identical runs are byte-identical)")


def _build_parser() -> _Parser:
    parser = _Parser(prog="nullacert", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    analyze = subs.add_parser("analyze", help="full report for single graphs")
    source = analyze.add_mutually_exclusive_group(required=True)
    source.add_argument("--in", dest="infile", metavar="FILE.g6",
                        help="graph6 file, one graph per line")
    source.add_argument("--gen", metavar="NAME[:ARG]",
                        help=f"built-in generator: {', '.join(GENERATORS)}")
    _common_flags(analyze)

    cen = subs.add_parser("census", help="4-critical degree census over a corpus")
    source = cen.add_mutually_exclusive_group(required=True)
    source.add_argument("--in", dest="infile", metavar="FILE.g6",
                        help="graph6 corpus (all non-isomorphic graphs of an "
                             "order, one per line)")
    source.add_argument("--enumerate", dest="enumerate_range", metavar="LO..HI",
                        help="exhaustive enumeration of orders LO..HI (HI <= 7)")
    cen.add_argument("--workers", type=int, default=1,
                     help="parallel worker processes (default 1)")
    _common_flags(cen)

    haj = subs.add_parser("hajos", help="join two graphs along edges and analyze")
    haj.add_argument("g6_a", help="first graph, graph6")
    haj.add_argument("edge_a", help="edge of the first graph, e.g. 0,1")
    haj.add_argument("g6_b", help="second graph, graph6")
    haj.add_argument("edge_b", help="edge of the second graph")
    _common_flags(haj)

    return parser


def _config_from(args) -> RunConfig:
    if args.cap < 1:
        raise UsageError("--cap must be at least 1")
    bit_cap = None
    if args.mem_cap is not None:
        if args.mem_cap < 1:
            raise UsageError("--mem-cap must be positive")
        bit_cap = args.mem_cap * 8
    return RunConfig(
        cap=args.cap,
        schedule=args.schedule,
        workers=getattr(args, "workers", 1),
        fmt=args.fmt,
        bit_cap=bit_cap,
        timings=args.timings,
    )


def _parse_generator(spec: str) -> Graph:
    name, _, arg = spec.partition(":")
    if name == "k4":
        return complete_graph(4)
    if name == "moser-spindle":
        return moser_spindle()
    if name == "wheel":
        if not arg:
            raise UsageError("wheel generator needs a rim size, e.g. wheel:5")
        try:
            rim = int(arg)
        except ValueError:
            raise UsageError(f"wheel rim size must be an integer, got {arg!r}")
        if rim < 3:
            raise UsageError("wheel rim size must be at least 3")
        return wheel(rim)
    raise UsageError(f"unknown generator {spec!r}; expected {', '.join(GENERATORS)}")


def _parse_edge(spec: str) -> tuple[int, int]:
    sep = "," if "," in spec else "-"
    parts = spec.split(sep)
    if len(parts) != 2:
        raise UsageError(f"edge must look like U,V - got {spec!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"edge endpoints must be integers, got {spec!r}")


def _read_graph_file(path: str) -> list[Graph]:
    try:
        with open(path, encoding="ascii") as fh:
            return list(iter_graph6(fh))
    except OSError as err:
        raise Graph6Error(f"cannot read {path}: {err}")


def _parse_range(spec: str) -> Iterator[int]:
    parts = spec.split("..")
    if len(parts) != 2:
        raise UsageError(f"range must look like LO..HI, got {spec!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"range bounds must be integers, got {spec!r}")
    if lo < 1 or hi < lo:
        raise UsageError(f"bad range {spec!r}")
    return range(lo, hi + 1)


def _analyze_graph(g: Graph, cfg: RunConfig):
    report = nulla_degree(g, cap=cfg.cap, schedule=cfg.schedule, bit_cap=cfg.bit_cap)
    if not report.colorable:
        report.four_critical = is_4critical(g)
        report.path_cover = path_cover_search(g)
        report.obstruction = short_cycle_obstruction(g)
    return report


def _cmd_analyze(args) -> int:
    cfg = _config_from(args)
    graphs = (
        _read_graph_file(args.infile) if args.infile else [_parse_generator(args.gen)]
    )
    reports = [_analyze_graph(g, cfg) for g in graphs]
    if cfg.fmt == "json":
        sys.stdout.write(
            rpt.render_json([rpt.report_json_obj(r, cfg.timings) for r in reports])
        )
    elif cfg.fmt == "csv":
        rows = [rpt.report_row(r, cfg.timings) for r in reports]
        sys.stdout.write(rpt.render_csv(rows, rpt.REPORT_FIELDS))
    else:
        sys.stdout.write(
            "\n".join(rpt.render_report_table(r, cfg.timings) for r in reports)
        )
    return 0


def _cmd_census(args) -> int:
    cfg = _config_from(args)
    if args.infile:
        graphs = _read_graph_file(args.infile)
    else:
        graphs = []
        for n in _parse_range(args.enumerate_range):
            graphs.extend(enumerate_nonisomorphic(n))
    result = census(
        graphs,
        cap=cfg.cap,
        schedule=cfg.schedule,
        workers=cfg.workers,
        bit_cap=cfg.bit_cap,
        progress=True,
    )
    for graph6, message in result.failures:
        print(f"failed: {graph6}: {message}", file=sys.stderr)
    if result.failures and not result.rows:
        return 3
    if cfg.fmt == "json":
        sys.stdout.write(rpt.render_json(rpt.census_row_dicts(result)))
    elif cfg.fmt == "csv":
        sys.stdout.write(rpt.render_csv(rpt.census_row_dicts(result), rpt.CENSUS_FIELDS))
    else:
        sys.stdout.write(rpt.render_census_table(result))
    return 0


def _cmd_hajos(args) -> int:
    cfg = _config_from(args)
    ga = parse_graph6(args.g6_a)
    gb = parse_graph6(args.g6_b)
    ea = _parse_edge(args.edge_a)
    eb = _parse_edge(args.edge_b)
    joined = hajos_join(ga, ea, gb, eb)
    report = _analyze_graph(joined, cfg)
    if cfg.fmt == "json":
        sys.stdout.write(rpt.render_json(rpt.report_json_obj(report, cfg.timings)))
    elif cfg.fmt == "csv":
        sys.stdout.write(
            rpt.render_csv([rpt.report_row(report, cfg.timings)], rpt.REPORT_FIELDS)
        )
    else:
        sys.stdout.write(write_graph6(joined) + "\n")
        sys.stdout.write(rpt.render_report_table(report, cfg.timings))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "census":
            return _cmd_census(args)
        if args.command == "hajos":
            return _cmd_hajos(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 1
    except Graph6Error as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    except CapacityError as err:
        print(f"capacity error: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
