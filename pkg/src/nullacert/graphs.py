"""Simple undirected graphs with a fixed, significant vertex order.

Vertices are the integers 0..n-1 and the order matters: downstream
parity conditions (extremal-middle paths) and canonical forms read the
indices directly, so nothing in this module relabels vertices silently.

The module provides graph6 serialization (single-byte size form,
n <= 62), exact 3-colorability and 4-criticality oracles, exhaustive
isomorphism-class enumeration for n <= 7, the named generators (wheels,
the Moser spindle), and the two Hajos-style constructions that generate
4-critical graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .errors import CapacityError, Graph6Error

DEFAULT_COLORING_CAP = 24
ENUMERATION_CAP = 7
GRAPH6_MAX_N = 62

_G6_HEADER = ">>graph6<<"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor set of v as a bitmask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbors outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1) if u != v else False

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in _bits(rest):
                out.append((u, v))
        return out

    @property
    def num_edges(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        adj = list(self.adj)
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        return Graph(self.n, tuple(adj))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is already an edge")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def delete_vertex(self, v: int) -> "Graph":
        """Remove v; vertices above it shift down by one."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        if self.n == 1:
            raise ValueError("cannot delete the last vertex")
        keep = [u for u in range(self.n) if u != v]
        remap = {u: i for i, u in enumerate(keep)}
        return Graph.from_edges(
            self.n - 1,
            [(remap[a], remap[b]) for a, b in self.edges() if v not in (a, b)],
        )

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Graph H with H.has_edge(a, b) iff self.has_edge(perm[a], perm[b])."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        inv = [0] * self.n
        for i, p in enumerate(perm):
            inv[p] = i
        return Graph.from_edges(self.n, [(inv[u], inv[v]) for u, v in self.edges()])


# ---------------------------------------------------------------------------
# Upper-triangle bit codec (shared by graph6 and canonical forms)
#
# Positions enumerate the strict upper triangle in column order:
# (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...  Position t of an
# n-vertex graph maps to integer bit L-1-t where L = n(n-1)/2, so the
# packed integer compares like the bitstring (first position is most
# significant).
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _triangle_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(1, n) for i in range(j))


def graph_to_mask(g: Graph) -> int:
    pairs = _triangle_pairs(g.n)
    length = len(pairs)
    mask = 0
    for t, (i, j) in enumerate(pairs):
        if g.has_edge(i, j):
            mask |= 1 << (length - 1 - t)
    return mask


def mask_to_graph(n: int, mask: int) -> Graph:
    pairs = _triangle_pairs(n)
    length = len(pairs)
    edges = [pairs[t] for t in range(length) if mask >> (length - 1 - t) & 1]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# graph6 (single-byte size form)
# ---------------------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; a leading '>>graph6<<' marker is tolerated."""
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 input", offset=base)
    c0 = ord(s[0])
    if c0 == 126:
        raise Graph6Error("extended size forms are not supported", offset=base)
    if not 63 <= c0 <= 125:
        raise Graph6Error(f"size character {s[0]!r} outside graph6 range", offset=base)
    n = c0 - 63
    if n == 0:
        raise Graph6Error("order-0 graphs are not supported", offset=base)
    length = n * (n - 1) // 2
    need = (length + 5) // 6
    data = s[1:]
    if len(data) < need:
        raise Graph6Error(
            f"truncated: expected {need} data bytes, found {len(data)}",
            offset=base + 1 + len(data),
        )
    if len(data) > need:
        raise Graph6Error("trailing garbage after graph data", offset=base + 1 + need)
    bits = []
    for k, ch in enumerate(data):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", offset=base + 1 + k)
        val = c - 63
        bits.extend((val >> shift & 1) for shift in range(5, -1, -1))
    for t in range(length, len(bits)):
        if bits[t]:
            raise Graph6Error("nonzero padding bits", offset=base + need)
    pairs = _triangle_pairs(n)
    return Graph.from_edges(n, [pairs[t] for t in range(length) if bits[t]])


def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise CapacityError(
            f"graph6 single-byte size form supports n <= {GRAPH6_MAX_N}, got n={g.n}"
        )
    pairs = _triangle_pairs(g.n)
    bits = [1 if g.has_edge(i, j) else 0 for i, j in pairs]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse graphs from lines, skipping blanks and a standalone header line."""
    for line in lines:
        stripped = line.rstrip("\r\n")
        if not stripped or stripped == _G6_HEADER:
            continue
        yield parse_graph6(stripped)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, itertools.combinations(range(k), 2))


def wheel(n: int) -> Graph:
    """Rim cycle on vertices 0..n-1 plus a hub (vertex n) joined to the rim."""
    if n < 3:
        raise ValueError("wheel needs a rim of at least 3 vertices")
    edges = [(t, (t + 1) % n) for t in range(n)]
    edges += [(t, n) for t in range(n)]
    return Graph.from_edges(n + 1, edges)


#: Edges of the Moser spindle, 0-indexed (vertex v_i of the usual drawing is i-1).
MOSER_SPINDLE_EDGES = (
    (0, 1), (0, 2), (0, 6),
    (1, 2), (1, 3),
    (2, 3),
    (3, 4), (3, 5),
    (4, 5), (4, 6),
    (5, 6),
)


def moser_spindle() -> Graph:
    return Graph.from_edges(7, MOSER_SPINDLE_EDGES)


# ---------------------------------------------------------------------------
# 3-colorability / 4-criticality oracles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Coloring:
    """A color in {0, 1, 2} per vertex."""

    colors: tuple[int, ...]

    def is_proper_for(self, g: Graph) -> bool:
        if len(self.colors) != g.n or any(c not in (0, 1, 2) for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())


def find_3coloring(g: Graph, cap: int = DEFAULT_COLORING_CAP) -> Coloring | None:
    """Backtracking search over vertices in descending-degree order.

    Deterministic: the witness is the first proper coloring in the fixed
    search order (colors tried ascending, new colors introduced lazily).
    """
    if g.n > cap:
        raise CapacityError(f"3-coloring oracle capped at {cap} vertices, got {g.n}")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colors = [-1] * g.n
    masks = [0, 0, 0]

    def extend(pos: int, used: int) -> bool:
        if pos == g.n:
            return True
        v = order[pos]
        for c in range(min(2, used) + 1):
            if g.adj[v] & masks[c]:
                continue
            colors[v] = c
            masks[c] |= 1 << v
            if extend(pos + 1, max(used, c + 1)):
                return True
            masks[c] ^= 1 << v
        colors[v] = -1
        return False

    return Coloring(tuple(colors)) if extend(0, 0) else None


def is_3colorable(g: Graph, cap: int = DEFAULT_COLORING_CAP) -> bool:
    return find_3coloring(g, cap) is not None


def is_4critical(g: Graph, cap: int = DEFAULT_COLORING_CAP) -> bool:
    """Not 3-colorable, but every proper subgraph is.

    Single-edge and single-vertex deletions suffice: every proper
    subgraph sits inside one of them.  For connected graphs the vertex
    condition follows from the edge condition; it matters only to rule
    out padding by isolated vertices, which the published census of
    4-critical graphs does not count.
    """
    if find_3coloring(g, cap) is not None:
        return False
    if any(
        find_3coloring(g.delete_edge(u, v), cap) is None for u, v in g.edges()
    ):
        return False
    if g.n > 1 and any(
        find_3coloring(g.delete_vertex(v), cap) is None for v in range(g.n)
    ):
        return False
    return True


def edge_on_short_cycle(g: Graph, u: int, v: int) -> tuple[bool, bool]:
    """Whether the edge uv lies on a 3-cycle and on a 4-cycle of g.

    "On a cycle" means the cycle uses uv as one of its edges: a 3-cycle
    through uv is a common neighbor, a 4-cycle through uv is a path
    u-y-x-v with x, y distinct and outside {u, v}.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    on3 = bool(g.adj[u] & g.adj[v])
    on4 = False
    outside = ~((1 << u) | (1 << v))
    for x in _bits(g.adj[v] & outside):
        if g.adj[x] & g.adj[u] & outside & ~(1 << x):
            on4 = True
            break
    return on3, on4


# ---------------------------------------------------------------------------
# Canonical forms and exhaustive enumeration (n <= 7)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Lexicographically minimal upper-triangle bitstring over all relabelings.

    Two graphs have equal canonical forms iff they are isomorphic; the
    guarantee comes from exhaustive minimization over all n! vertex
    permutations, which is why the order is capped at 7.
    """

    n: int
    bits: int


@lru_cache(maxsize=None)
def _perm_vertex_arrays(n: int):
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    pairs = _triangle_pairs(n)
    pi = np.array([p[0] for p in pairs], dtype=np.int64)
    pj = np.array([p[1] for p in pairs], dtype=np.int64)
    return perms[:, pi], perms[:, pj]


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > ENUMERATION_CAP:
        raise CapacityError(
            f"canonicalization by exhaustive permutation minimization is capped at "
            f"n <= {ENUMERATION_CAP}, got {g.n}"
        )
    if g.n == 1:
        return CanonicalForm(1, 0)
    dense = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        dense[u, v] = dense[v, u] = 1
    rows, cols = _perm_vertex_arrays(g.n)
    vals = dense[rows, cols]  # (n!, L): position bits per permutation
    length = vals.shape[1]
    weights = (1 << (length - 1 - np.arange(length))).astype(np.int64)
    return CanonicalForm(g.n, int((vals @ weights).min()))


@lru_cache(maxsize=None)
def _bitperm_tables(n: int):
    """Per-permutation lookup tables mapping 7-bit chunks of a packed mask
    through the induced bit permutation.  Internal; supports n <= 8."""
    pairs = _triangle_pairs(n)
    length = len(pairs)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    nperms = perms.shape[0]
    # src_pos_of_dst[p, t]: which position of the original mask lands at
    # position t after relabeling by permutation p.
    src_pos_of_dst = np.empty((nperms, length), dtype=np.int64)
    for t, (i, j) in enumerate(pairs):
        a = perms[:, i]
        b = perms[:, j]
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        src_pos_of_dst[:, t] = hi * (hi - 1) // 2 + lo
    dst_pos_of_src = np.argsort(src_pos_of_dst, axis=1)  # inverse permutation
    # Integer bit index of position t is length-1-t.
    dst_bit_of_src_bit = np.empty((nperms, length), dtype=np.int64)
    for beta in range(length):
        dst_bit_of_src_bit[:, beta] = length - 1 - dst_pos_of_src[:, length - 1 - beta]
    nchunks = (length + 6) // 7
    vals = np.arange(128, dtype=np.uint32)
    valbits = ((vals[:, None] >> np.arange(7)) & 1).astype(np.uint32)  # (128, 7)
    tables = []
    for c in range(nchunks):
        width = min(7, length - 7 * c)
        shifts = dst_bit_of_src_bit[:, 7 * c : 7 * c + width].astype(np.uint32)
        contrib = valbits[None, :, :width] << shifts[:, None, :]
        tables.append(np.bitwise_or.reduce(contrib, axis=2))  # (nperms, 128)
    return nchunks, tables


def _canonical_mask_array(n: int, masks: np.ndarray) -> np.ndarray:
    """Exhaustive-minimization canonical form of each packed mask.

    Vectorized over both masks and permutations; internal tool behind
    enumerate_nonisomorphic and the corpus generator (n <= 8)."""
    if n > 8:
        raise CapacityError("mask canonicalization supports n <= 8")
    nchunks, tables = _bitperm_tables(n)
    masks = masks.astype(np.uint32)
    chunk_idx = [
        ((masks >> np.uint32(7 * c)) & np.uint32(127)).astype(np.int64)
        for c in range(nchunks)
    ]
    canon = masks.copy()
    nperms = tables[0].shape[0]
    for p in range(nperms):
        permuted = tables[0][p][chunk_idx[0]]
        for c in range(1, nchunks):
            permuted = permuted | tables[c][p][chunk_idx[c]]
        np.minimum(canon, permuted, out=canon)
    return canon


@lru_cache(maxsize=None)
def _nonisomorphic_reps(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)
    length = n * (n - 1) // 2
    masks = np.arange(1 << length, dtype=np.uint32)
    reps = np.unique(_canonical_mask_array(n, masks))
    return tuple(mask_to_graph(n, int(m)) for m in reps)


def enumerate_nonisomorphic(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class, ascending by canonical form.

    Exhausts all 2^(n(n-1)/2) labeled graphs with canonical-form dedup,
    hence the n <= 7 cap; larger orders come in via graph6 files.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > ENUMERATION_CAP:
        raise CapacityError(
            f"exhaustive enumeration is capped at n <= {ENUMERATION_CAP}; "
            "ingest larger orders from a graph6 corpus instead"
        )
    yield from _nonisomorphic_reps(n)


# ---------------------------------------------------------------------------
# Constructions that generate the 4-critical graphs
# ---------------------------------------------------------------------------


def hajos_join(
    g: Graph, vw: tuple[int, int], h: Graph, xy: tuple[int, int]
) -> Graph:
    """Hajos construction: merge v with x, drop vw and xy, add the edge wy.

    The first vertex of each edge pair is the one merged.  Vertices of g
    keep their labels; the surviving vertices of h follow in order.
    """
    v, w = vw
    x, y = xy
    if not g.has_edge(v, w):
        raise ValueError(f"({v}, {w}) is not an edge of the first graph")
    if not h.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge of the second graph")

    def hmap(a: int) -> int:
        if a == x:
            return v
        return g.n + a - (1 if a > x else 0)

    edges = set(g.edges())
    edges.discard((min(v, w), max(v, w)))
    for a, b in h.edges():
        if {a, b} == {x, y}:
            continue
        ma, mb = hmap(a), hmap(b)
        edges.add((min(ma, mb), max(ma, mb)))
    my = hmap(y)
    edges.add((min(w, my), max(w, my)))
    return Graph.from_edges(g.n + h.n - 1, sorted(edges))


def identify_nonadjacent(g: Graph, u: int, v: int) -> Graph:
    """Merge two non-adjacent vertices; the merged vertex keeps min(u, v)."""
    if u == v:
        raise ValueError("cannot identify a vertex with itself")
    if g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is an edge; identification needs a non-edge")
    lo, hi = min(u, v), max(u, v)

    def remap(a: int) -> int:
        if a == hi:
            return lo
        return a - (1 if a > hi else 0)

    edges = {(min(remap(a), remap(b)), max(remap(a), remap(b))) for a, b in g.edges()}
    return Graph.from_edges(g.n - 1, sorted(edges))
