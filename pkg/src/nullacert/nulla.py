"""Degree-bounded certificate search (the NulLA loop) and the census.

Fixing a degree bound d turns "does sum(alpha_f * f) = 1 have a solution
with deg(alpha_f) <= d" into GF(2) linear algebra: one unknown per
(generator, multiplier-monomial) pair, one equation per product
monomial, right-hand side the indicator of the constant monomial.  The
engine escalates d on failure; over GF(2) the attainable degrees are
1 mod 3, so the default schedule tries d = 1, 4, ... up to the cap.

Every certificate any search returns is re-verified by symbolic
expansion before it leaves this module; nothing is trusted from the
solver alone.
"""

from __future__ import annotations

import itertools
import sys
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable

from . import gf2
from .errors import CapacityError
from .graphs import Coloring, Graph, find_3coloring, is_4critical, write_graph6
from .pathcover import ObstructionWitness, PathCover
from .polynomials import (
    Certificate,
    GenKey,
    Gf2Polynomial,
    _degree1_family_labeled,
    build_bayer_system,
    lift_to_bayer,
    make_certificate,
    verify_certificate,
)

DEFAULT_DEGREE_CAP = 4
SCHEDULES = ("mod3", "all")


def _monomials_upto(n: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent tuples of all monomials of degree <= degree, ascending
    graded-lex: (degree, exponent tuple)."""
    out = []
    for total in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(n), total):
            e = [0] * n
            for v in combo:
                e[v] += 1
            out.append(tuple(e))
    return sorted(out, key=lambda e: (sum(e), e))


@dataclass(frozen=True, eq=False)
class CertificateSystem:
    """The assembled linear system of one degree-d certificate search.

    Rows are product monomials (only those that occur, plus the constant),
    in ascending graded-lex order; columns are (generator, multiplier
    monomial) pairs ordered by multiplier monomial then generator index.
    Column (f, m) has row support exactly the terms of m*f.
    """

    graph: Graph
    degree: int
    matrix: gf2.Gf2Matrix
    row_monomials: tuple[tuple[int, ...], ...]
    columns: tuple[tuple[GenKey, tuple[int, ...]], ...]
    rhs: tuple[int, ...]


def build_certificate_system(
    g: Graph, degree: int, bit_cap: int | None = gf2.DEFAULT_BIT_CAP
) -> CertificateSystem:
    if degree < 0:
        raise ValueError("degree bound must be non-negative")
    system = build_bayer_system(g)
    gens = system.generators()
    multipliers = _monomials_upto(g.n, degree)
    columns: list[tuple[GenKey, tuple[int, ...]]] = []
    supports: list[list[tuple[int, ...]]] = []
    seen: set[tuple[int, ...]] = set()
    for m in multipliers:
        for key, poly in gens:
            shifted = [
                tuple(a + b for a, b in zip(m, t.exponents)) for t in poly.terms
            ]
            columns.append((key, m))
            supports.append(shifted)
            seen.update(shifted)
    const = (0,) * g.n
    seen.add(const)
    row_list = sorted(seen, key=lambda e: (sum(e), e))
    row_index = {e: r for r, e in enumerate(row_list)}
    nrows, ncols = len(row_list), len(columns)
    if bit_cap is not None and nrows * (ncols + 1) > bit_cap:
        raise CapacityError(
            f"degree-{degree} system for n={g.n} needs {nrows} rows x {ncols} "
            f"columns = {nrows * (ncols + 1)} bits, over the {bit_cap}-bit cap"
        )
    matrix = gf2.Gf2Matrix.from_col_supports(
        nrows, [[row_index[e] for e in s] for s in supports], bit_cap=bit_cap
    )
    rhs = [0] * nrows
    rhs[row_index[const]] = 1
    return CertificateSystem(
        graph=g,
        degree=degree,
        matrix=matrix,
        row_monomials=tuple(row_list),
        columns=tuple(columns),
        rhs=tuple(rhs),
    )


def certificate_search(
    g: Graph, degree: int, bit_cap: int | None = gf2.DEFAULT_BIT_CAP
) -> Certificate | None:
    """A verified certificate with max multiplier degree <= degree, or None."""
    cs = build_certificate_system(g, degree, bit_cap)
    result = gf2.solve(cs.matrix, cs.rhs)
    if not result.feasible:
        return None
    parts: dict = {}
    for bit, (key, m) in zip(result.solution, cs.columns):
        if bit:
            parts.setdefault(key, []).append(m)
    multipliers = {
        key: Gf2Polynomial.from_exponents(g.n, monos) for key, monos in parts.items()
    }
    cert = make_certificate(g, degree, multipliers)
    if not verify_certificate(build_bayer_system(g), cert):
        raise RuntimeError("internal error: solver certificate fails verification")
    return cert


def degree1_search_fast(g: Graph) -> Certificate | None:
    """Degree-1 search through the much smaller edge-unit-path family.

    Decides membership of 1 in the family's span, then lifts the witness
    combination back to the original generators via the rewriting
    identities.  Agrees with certificate_search(g, 1) on existence.
    """
    family = _degree1_family_labeled(g, "edge-unit-path")
    const = (0,) * g.n
    monomials = sorted(
        {t.exponents for _, poly in family for t in poly.terms} | {const},
        key=lambda e: (sum(e), e),
    )
    index = {e: r for r, e in enumerate(monomials)}
    vectors = []
    for _, poly in family:
        vec = [0] * len(monomials)
        for t in poly.terms:
            vec[index[t.exponents]] = 1
        vectors.append(vec)
    target = [0] * len(monomials)
    target[index[const]] = 1
    ok, witness = gf2.in_span(vectors, target)
    if not ok:
        return None
    labels = [family[i][0] for i in witness]
    cert = make_certificate(g, 1, lift_to_bayer(g.n, labels))
    if not verify_certificate(build_bayer_system(g), cert):
        raise RuntimeError("internal error: lifted certificate fails verification")
    return cert


@dataclass
class DegreeReport:
    """Everything one graph's analysis produced."""

    graph: Graph
    colorable: bool
    coloring: Coloring | None = None
    nulla_degree: int | None = None
    above_cap: bool = False
    certificate: Certificate | None = None
    path_cover: PathCover | None = None
    four_critical: bool | None = None
    obstruction: ObstructionWitness | None = None
    wall_ms: float = 0.0

    @property
    def graph6(self) -> str:
        return write_graph6(self.graph)


def _schedule_degrees(cap: int, schedule: str) -> range:
    if cap < 1:
        raise ValueError("degree cap must be at least 1")
    if schedule == "mod3":
        return range(1, cap + 1, 3)
    if schedule == "all":
        return range(1, cap + 1)
    raise ValueError(f"unknown schedule {schedule!r}; expected one of {SCHEDULES}")


def nulla_degree(
    g: Graph,
    cap: int = DEFAULT_DEGREE_CAP,
    schedule: str = "mod3",
    bit_cap: int | None = gf2.DEFAULT_BIT_CAP,
) -> DegreeReport:
    """Smallest scheduled degree with a certificate, or above-cap.

    3-colorable graphs short-circuit through the coloring oracle; no
    search runs for them, so "no certificate at the cap" is only ever
    reported for graphs that really are non-3-colorable.
    """
    degrees = _schedule_degrees(cap, schedule)
    start = time.perf_counter()
    coloring = find_3coloring(g)
    if coloring is not None:
        return DegreeReport(
            graph=g,
            colorable=True,
            coloring=coloring,
            wall_ms=(time.perf_counter() - start) * 1000.0,
        )
    for d in degrees:
        try:
            cert = certificate_search(g, d, bit_cap)
        except CapacityError as err:
            err.partial_report = DegreeReport(
                graph=g,
                colorable=False,
                above_cap=True,
                wall_ms=(time.perf_counter() - start) * 1000.0,
            )
            raise
        if cert is not None:
            return DegreeReport(
                graph=g,
                colorable=False,
                nulla_degree=d,
                certificate=cert,
                wall_ms=(time.perf_counter() - start) * 1000.0,
            )
    return DegreeReport(
        graph=g,
        colorable=False,
        above_cap=True,
        wall_ms=(time.perf_counter() - start) * 1000.0,
    )


# ---------------------------------------------------------------------------
# Census over graph streams
# ---------------------------------------------------------------------------


@dataclass
class CensusRow:
    """Per-order bucket: 4-critical totals split by certificate degree."""

    n: int
    degree_counts: dict = field(default_factory=dict)
    above_cap: int = 0
    total_4critical: int = 0

    def count_at(self, degree: int) -> int:
        return self.degree_counts.get(degree, 0)


@dataclass
class CensusResult:
    rows: list[CensusRow]
    failures: list[tuple[str, str]]


def _census_entry(
    args: tuple[Graph, int, str, int | None]
) -> tuple[int, str, object]:
    g, cap, schedule, bit_cap = args
    try:
        if find_3coloring(g) is not None:
            return (g.n, "colorable", None)
        if not is_4critical(g):
            return (g.n, "noncritical", None)
        report = nulla_degree(g, cap=cap, schedule=schedule, bit_cap=bit_cap)
        if report.above_cap:
            return (g.n, "above-cap", None)
        return (g.n, "degree", report.nulla_degree)
    except Exception as err:  # per-graph failures are recorded, not fatal
        return (g.n, "error", f"{type(err).__name__}: {err}")


def census(
    graphs: Iterable[Graph],
    cap: int = DEFAULT_DEGREE_CAP,
    schedule: str = "mod3",
    workers: int = 1,
    bit_cap: int | None = gf2.DEFAULT_BIT_CAP,
    progress: bool = False,
) -> CensusResult:
    """Aggregate 4-critical counts by order and certificate degree.

    Only 4-critical graphs get a degree search; everything else just
    contributes its order to the row set.  Totals are commutative
    counters, so they do not depend on input order or worker count.
    """
    _schedule_degrees(cap, schedule)  # validate early
    entries = list(graphs)
    jobs = [(g, cap, schedule, bit_cap) for g in entries]
    if workers > 1:
        with Pool(workers) as pool:
            outcomes = pool.map(_census_entry, jobs, chunksize=64)
    else:
        outcomes = []
        for idx, job in enumerate(jobs):
            outcomes.append(_census_entry(job))
            if progress and (idx + 1) % 2000 == 0:
                print(f"census: {idx + 1}/{len(jobs)} graphs", file=sys.stderr)
    buckets: dict[int, CensusRow] = {}
    failures: list[tuple[str, str]] = []
    for g, (n, kind, detail) in zip(entries, outcomes):
        row = buckets.setdefault(n, CensusRow(n=n))
        if kind in ("colorable", "noncritical"):
            continue
        if kind == "error":
            failures.append((write_graph6(g), str(detail)))
            continue
        row.total_4critical += 1
        if kind == "above-cap":
            row.above_cap += 1
        else:
            d = int(detail)
            row.degree_counts[d] = row.degree_counts.get(d, 0) + 1
    rows = [buckets[n] for n in sorted(buckets)]
    for row in rows:
        row.degree_counts = dict(sorted(row.degree_counts.items()))
    return CensusResult(rows=rows, failures=failures)
