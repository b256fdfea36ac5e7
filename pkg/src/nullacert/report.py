"""Rendering of analysis reports and census tables as CSV, JSON and text.

The flat per-graph row schema is
    {n, graph6, is_4critical, nulla_degree, certificate_size, wall_ms}
with nulla_degree empty for 3-colorable graphs and "above-cap" when no
scheduled degree succeeded.  Timings default to 0 so that identical
inputs produce byte-identical output; callers opt in to measured times.
"""

from __future__ import annotations

import csv
import io
import json

from .nulla import CensusResult, DegreeReport

REPORT_FIELDS = ("n", "graph6", "is_4critical", "nulla_degree",
                 "certificate_size", "wall_ms")
CENSUS_FIELDS = ("n", "degree_1", "degree_4", "above_cap", "total_4critical")


def _degree_cell(report: DegreeReport):
    if report.colorable:
        return ""
    if report.above_cap:
        return "above-cap"
    return report.nulla_degree


def report_row(report: DegreeReport, timings: bool = False) -> dict:
    """The flat CSV/JSON row for one graph."""
    return {
        "n": report.graph.n,
        "graph6": report.graph6,
        "is_4critical": report.four_critical,
        "nulla_degree": _degree_cell(report),
        "certificate_size": report.certificate.size if report.certificate else 0,
        "wall_ms": int(report.wall_ms) if timings else 0,
    }


def report_json_obj(report: DegreeReport, timings: bool = False) -> dict:
    obj = {
        "n": report.graph.n,
        "graph6": report.graph6,
        "colorable": report.colorable,
        "coloring": list(report.coloring.colors) if report.coloring else None,
        "is_4critical": report.four_critical,
        "nulla_degree": report.nulla_degree,
        "above_cap": report.above_cap,
        "certificate": (
            {"degree": report.certificate.degree, "size": report.certificate.size}
            if report.certificate
            else None
        ),
        "path_cover": (
            [list(t) for t in report.path_cover.triples()]
            if report.path_cover is not None
            else None
        ),
        "obstruction": (
            {
                "edge": list(report.obstruction.edge),
                "deletion_3colorable": report.obstruction.deletion_3colorable,
                "on_no_3cycle": report.obstruction.on_no_3cycle,
                "on_no_4cycle": report.obstruction.on_no_4cycle,
            }
            if report.obstruction is not None
            else None
        ),
        "wall_ms": int(report.wall_ms) if timings else 0,
    }
    return obj


def census_row_dicts(result: CensusResult) -> list[dict]:
    return [
        {
            "n": row.n,
            "degree_1": row.count_at(1),
            "degree_4": row.count_at(4),
            "above_cap": row.above_cap,
            "total_4critical": row.total_4critical,
        }
        for row in result.rows
    ]


def render_csv(rows: list[dict], fields: tuple[str, ...]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if row.get(k) is None else row.get(k)) for k in fields})
    return buf.getvalue()


def render_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def render_census_table(result: CensusResult) -> str:
    header = f"{'|V|':>4}  {'N=1':>6}  {'N=4':>6}  {'N>cap':>6}  {'total 4-critical':>17}"
    lines = [header, "-" * len(header)]
    for row in result.rows:
        lines.append(
            f"{row.n:>4}  {row.count_at(1):>6}  {row.count_at(4):>6}  "
            f"{row.above_cap:>6}  {row.total_4critical:>17}"
        )
    return "\n".join(lines) + "\n"


def render_report_table(report: DegreeReport, timings: bool = False) -> str:
    lines = [f"graph6: {report.graph6}  (n={report.graph.n}, m={report.graph.num_edges})"]
    if report.colorable:
        lines.append("3-colorable: yes")
        if report.coloring:
            lines.append(f"coloring: {list(report.coloring.colors)}")
    else:
        lines.append("3-colorable: no")
        if report.four_critical is not None:
            lines.append(f"4-critical: {'yes' if report.four_critical else 'no'}")
        if report.above_cap:
            lines.append("certificate degree: above-cap")
        else:
            lines.append(f"certificate degree: {report.nulla_degree}")
        if report.certificate:
            lines.append(
                f"certificate: degree {report.certificate.degree}, "
                f"{report.certificate.size} monomials"
            )
        if report.path_cover is not None:
            lines.append(f"path cover ({len(report.path_cover)} paths): "
                         f"{report.path_cover.triples()}")
        else:
            lines.append("path cover: none")
        if report.obstruction is not None:
            u, v = report.obstruction.edge
            lines.append(
                f"obstruction edge: ({u}, {v}) - deletion 3-colorable, "
                "on no 3-cycle, on no 4-cycle"
            )
    if timings:
        lines.append(f"wall_ms: {int(report.wall_ms)}")
    return "\n".join(lines) + "\n"
