"""Length-2-path covers: the combinatorial face of degree-1 certificates.

A graph admits a degree-1 certificate of non-3-colorability (over GF(2),
for the cubic encoding) exactly when there is a set C of length-2 paths
such that
  (1) every edge appears as a leg of an even number of paths in C,
  (2) the number of paths whose middle index is smaller than both
      endpoint indices or larger than both ("extremal middle") is odd,
  (3) every non-adjacent vertex pair is the endpoint pair of an even
      number of paths in C.

Existence is a GF(2) feasibility question with one variable per path;
this module searches for covers, verifies them condition by condition,
converts covers to certificates over the original generators and
certificates back to covers, and checks the short-cycle obstruction
that rules covers out.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import gf2
from .graphs import DEFAULT_COLORING_CAP, Graph, edge_on_short_cycle, find_3coloring
from .polynomials import (
    Certificate,
    Gf2Polynomial,
    _degree1_family_labeled,
    build_bayer_system,
    lift_to_bayer,
    make_certificate,
    verify_certificate,
)


@dataclass(frozen=True)
class Path2:
    """A length-2 path: endpoints i < k with middle j adjacent to both."""

    i: int
    j: int
    k: int

    def __post_init__(self):
        if self.i == self.k or self.j in (self.i, self.k):
            raise ValueError("path vertices must be three distinct vertices")
        if self.i > self.k:
            lo, hi = self.k, self.i
            object.__setattr__(self, "i", lo)
            object.__setattr__(self, "k", hi)

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.i, self.k)

    @property
    def middle(self) -> int:
        return self.j

    def legs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (
            (min(self.i, self.j), max(self.i, self.j)),
            (min(self.j, self.k), max(self.j, self.k)),
        )

    @property
    def extremal_middle(self) -> bool:
        return self.j < self.i or self.j > self.k

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)


@dataclass(frozen=True)
class PathCover:
    """A set of length-2 paths (set semantics: no multiplicities)."""

    paths: frozenset[Path2]

    def __len__(self) -> int:
        return len(self.paths)

    def triples(self) -> list[tuple[int, int, int]]:
        """Sorted [i, j, k] triples (middle second), the JSON wire form."""
        return sorted(p.triple for p in self.paths)


@dataclass(frozen=True)
class CoverCheck:
    """Per-condition breakdown of a cover verification."""

    edge_violations: tuple[tuple[int, int], ...]
    extremal_parity_ok: bool
    nonedge_violations: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return (
            not self.edge_violations
            and self.extremal_parity_ok
            and not self.nonedge_violations
        )

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ObstructionWitness:
    """An edge whose deletion is 3-colorable and which avoids short cycles."""

    edge: tuple[int, int]
    deletion_3colorable: bool
    on_no_3cycle: bool
    on_no_4cycle: bool


def enumerate_paths2(g: Graph) -> list[Path2]:
    """All length-2 paths of g, sorted by (i, j, k)."""
    out = []
    for j in range(g.n):
        nbrs = g.neighbors(j)
        for a in range(len(nbrs)):
            for b in range(a + 1, len(nbrs)):
                out.append(Path2(nbrs[a], j, nbrs[b]))
    return sorted(out, key=lambda p: p.triple)


def _check_paths_belong(g: Graph, paths: Iterable[Path2]) -> None:
    for p in paths:
        if not (0 <= p.i < g.n and 0 <= p.j < g.n and 0 <= p.k < g.n):
            raise ValueError(f"path {p.triple} has vertices outside the graph")
        for u, v in p.legs():
            if not g.has_edge(u, v):
                raise ValueError(f"path {p.triple} uses the non-edge ({u}, {v})")


def verify_cover(g: Graph, cover: PathCover) -> CoverCheck:
    """Check the three parity conditions, reporting each violation."""
    _check_paths_belong(g, cover.paths)
    leg_count: Counter = Counter()
    endpoint_count: Counter = Counter()
    extremal = 0
    for p in cover.paths:
        for leg in p.legs():
            leg_count[leg] += 1
        endpoint_count[p.endpoints] += 1
        if p.extremal_middle:
            extremal += 1
    edge_violations = tuple(
        e for e in g.edges() if leg_count[e] % 2 == 1
    )
    nonedge_violations = tuple(
        sorted(
            pair
            for pair, c in endpoint_count.items()
            if c % 2 == 1 and not g.has_edge(*pair)
        )
    )
    return CoverCheck(
        edge_violations=edge_violations,
        extremal_parity_ok=extremal % 2 == 1,
        nonedge_violations=nonedge_violations,
    )


def path_cover_search(g: Graph) -> PathCover | None:
    """GF(2) feasibility search for a cover; None iff no cover exists.

    One variable per path; parity-0 rows per edge (legs) and per realized
    non-adjacent endpoint pair, one parity-1 row over extremal-middle
    paths.  The particular solution of the fixed-pivot solver makes the
    returned cover deterministic; no minimality is promised.
    """
    paths = enumerate_paths2(g)
    rows: list[list[int]] = []
    rhs: list[int] = []
    by_leg: dict = {}
    for idx, p in enumerate(paths):
        for leg in p.legs():
            by_leg.setdefault(leg, []).append(idx)
    for e in g.edges():
        rows.append(by_leg.get(e, []))
        rhs.append(0)
    by_endpoints: dict = {}
    for idx, p in enumerate(paths):
        by_endpoints.setdefault(p.endpoints, []).append(idx)
    for pair in sorted(by_endpoints):
        if not g.has_edge(*pair):
            rows.append(by_endpoints[pair])
            rhs.append(0)
    rows.append([idx for idx, p in enumerate(paths) if p.extremal_middle])
    rhs.append(1)
    matrix = gf2.Gf2Matrix.from_row_supports(len(paths), rows)
    result = gf2.solve(matrix, rhs)
    if not result.feasible:
        return None
    cover = PathCover(
        frozenset(p for p, bit in zip(paths, result.solution) if bit)
    )
    if not verify_cover(g, cover):
        raise RuntimeError("internal error: solver cover fails verification")
    return cover


def _odd_containment_pairs(paths: Iterable[Path2]) -> set[tuple[int, int]]:
    """Index pairs (a, b) with a < b such that an odd number of paths
    contain vertex a and have vertex b as an endpoint."""
    cnt: Counter = Counter()
    for p in paths:
        for b in p.endpoints:
            for a in (p.i, p.j, p.k):
                if a < b:
                    cnt[(a, b)] += 1
    return {pair for pair, c in cnt.items() if c % 2 == 1}


def cover_to_certificate(g: Graph, cover: PathCover) -> Certificate:
    """Constructive lift of a valid cover to a verified degree-1 certificate.

    Each path contributes its path polynomial, each odd containment pair
    its edge-unit polynomial; the sum telescopes to 1 and the rewriting
    identities express everything over the original generators.
    """
    check = verify_cover(g, cover)
    if not check.ok:
        raise ValueError(f"invalid cover: {check}")
    labels = [("path", p.triple) for p in sorted(cover.paths, key=lambda p: p.triple)]
    for a, b in sorted(_odd_containment_pairs(cover.paths)):
        if not g.has_edge(a, b):
            raise RuntimeError(
                "internal error: odd containment pair on a non-edge in a valid cover"
            )
        labels.append(("edge-unit", (a, b)))
    cert = make_certificate(g, 1, lift_to_bayer(g.n, labels))
    if not verify_certificate(build_bayer_system(g), cert):
        raise RuntimeError("internal error: lifted certificate fails verification")
    return cert


def certificate_to_cover(g: Graph, combination: Sequence[int]) -> PathCover:
    """Extract a cover from a degree-1 combination over the edge-unit-path
    family (coefficients aligned with degree1_family(g, "edge-unit-path")).

    The paths whose polynomials appear an odd number of times form the
    cover; the selected polynomials must sum to 1.
    """
    family = _degree1_family_labeled(g, "edge-unit-path")
    if len(combination) != len(family):
        raise ValueError(
            f"combination has length {len(combination)}, family has {len(family)}"
        )
    chosen = [
        entry for entry, coeff in zip(family, combination) if int(coeff) & 1
    ]
    total = Gf2Polynomial.zero(g.n)
    for _, poly in chosen:
        total = total + poly
    if not total.is_one:
        raise ValueError("combination does not sum to 1")
    multiplicity: Counter = Counter()
    for (kind, data), _ in chosen:
        if kind == "path":
            i, j, k = data
            multiplicity[(min(i, k), j, max(i, k))] += 1
    cover = PathCover(
        frozenset(
            Path2(i, j, k) for (i, j, k), c in multiplicity.items() if c % 2 == 1
        )
    )
    if not verify_cover(g, cover):
        raise RuntimeError("internal error: extracted cover fails verification")
    return cover


def short_cycle_obstruction(
    g: Graph, cap: int = DEFAULT_COLORING_CAP
) -> ObstructionWitness | None:
    """First edge (in edge order) whose deletion is 3-colorable and which
    lies on no 3-cycle and no 4-cycle; such an edge rules out any cover.

    The graph itself must be non-3-colorable.
    """
    if find_3coloring(g, cap) is not None:
        raise ValueError("graph is 3-colorable; the obstruction is undefined")
    for u, v in g.edges():
        on3, on4 = edge_on_short_cycle(g, u, v)
        if on3 or on4:
            continue
        if find_3coloring(g.delete_edge(u, v), cap) is None:
            continue
        return ObstructionWitness(
            edge=(u, v),
            deletion_3colorable=True,
            on_no_3cycle=True,
            on_no_4cycle=True,
        )
    return None


def endpoint_parity_predicates(
    g: Graph, paths: Iterable[Path2]
) -> tuple[bool, bool, bool]:
    """Three parity statements about an arbitrary path set, each computed
    independently (they are provably equivalent; tests assert it):

      (1) the number of index pairs (a, b), a < b, for which an odd
          number of paths contain a and end at b, is odd;
      (2) the total count, over all such pairs, of paths containing a
          and ending at b, is odd;
      (3) the number of extremal-middle paths is odd.
    """
    paths = list(paths)
    _check_paths_belong(g, paths)

    cnt: Counter = Counter()
    for p in paths:
        for b in p.endpoints:
            for a in (p.i, p.j, p.k):
                if a < b:
                    cnt[(a, b)] += 1
    p1 = sum(1 for c in cnt.values() if c % 2 == 1) % 2 == 1

    total = 0
    for p in paths:
        for b in p.endpoints:
            for a in (p.i, p.j, p.k):
                if a < b:
                    total += 1
    p2 = total % 2 == 1

    p3 = sum(1 for p in paths if p.extremal_middle) % 2 == 1
    return p1, p2, p3


__all__ = [
    "Path2",
    "PathCover",
    "CoverCheck",
    "ObstructionWitness",
    "enumerate_paths2",
    "verify_cover",
    "path_cover_search",
    "cover_to_certificate",
    "certificate_to_cover",
    "short_cycle_obstruction",
    "endpoint_parity_predicates",
]
