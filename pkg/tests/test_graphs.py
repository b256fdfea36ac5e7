import itertools
import random

import networkx as nx
import pytest

from nullacert.errors import CapacityError, Graph6Error
from nullacert.graphs import (
    Graph,
    canonical_form,
    complete_graph,
    edge_on_short_cycle,
    enumerate_nonisomorphic,
    find_3coloring,
    graph_to_mask,
    hajos_join,
    identify_nonadjacent,
    is_3colorable,
    is_4critical,
    iter_graph6,
    mask_to_graph,
    moser_spindle,
    parse_graph6,
    wheel,
    write_graph6,
)


def exhaustive_3colorable(g: Graph) -> bool:
    """Independent oracle: try all 3^n assignments."""
    edges = g.edges()
    for colors in itertools.product(range(3), repeat=g.n):
        if all(colors[u] != colors[v] for u, v in edges):
            return True
    return False


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


# --- construction and validation -------------------------------------------


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (1, 1))  # loop at vertex 0
    with pytest.raises(ValueError):
        Graph(2, (2, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])


def test_edges_and_degrees():
    g = complete_graph(4)
    assert g.num_edges == 6
    assert g.edges() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert [g.degree(v) for v in range(4)] == [3, 3, 3, 3]
    h = g.delete_edge(0, 1)
    assert not h.has_edge(0, 1) and h.num_edges == 5
    with pytest.raises(ValueError):
        h.delete_edge(0, 1)
    assert h.add_edge(0, 1) == g


def test_delete_vertex():
    g = complete_graph(4).delete_vertex(0)
    assert g == complete_graph(3)
    with pytest.raises(ValueError):
        Graph.empty(1).delete_vertex(0)


def test_relabel_roundtrip():
    rng = random.Random(7)
    for _ in range(20):
        g = random_graph(6, 0.5, rng)
        perm = list(range(6))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert h.num_edges == g.num_edges
        for a, b in itertools.combinations(range(6), 2):
            assert h.has_edge(a, b) == g.has_edge(perm[a], perm[b])


# --- generators --------------------------------------------------------------


def test_wheel_shape():
    assert wheel(3) == complete_graph(4)
    w5 = wheel(5)
    assert w5.n == 6 and w5.num_edges == 10
    assert all(w5.has_edge(t, 5) for t in range(5))  # hub is the last vertex
    assert not is_3colorable(w5)
    assert is_3colorable(wheel(4))
    with pytest.raises(ValueError):
        wheel(2)


def test_moser_spindle_shape():
    m = moser_spindle()
    assert m.n == 7 and m.num_edges == 11
    assert not is_3colorable(m)
    assert is_3colorable(m.delete_edge(0, 6))


# --- graph6 -------------------------------------------------------------------


def test_graph6_fixtures():
    assert parse_graph6("C~") == complete_graph(4)
    assert parse_graph6("D??") == Graph.empty(5)
    assert write_graph6(Graph.empty(1)) == "@"
    assert write_graph6(complete_graph(4)) == "C~"
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)


def test_graph6_roundtrip_named():
    for g in (complete_graph(4), wheel(5), wheel(8), moser_spindle()):
        assert parse_graph6(write_graph6(g)) == g


def test_graph6_errors_name_offset():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error, match="offset 0"):
        parse_graph6("\x20~")  # size char below 63
    with pytest.raises(Graph6Error, match="extended"):
        parse_graph6("~??")
    with pytest.raises(Graph6Error, match="trailing"):
        parse_graph6("C~~")
    with pytest.raises(Graph6Error, match="truncated"):
        parse_graph6("D?")
    with pytest.raises(Graph6Error, match="offset 1"):
        parse_graph6("C\x07")
    with pytest.raises(CapacityError):
        write_graph6(Graph.empty(63))


def test_graph6_against_networkx():
    rng = random.Random(42)
    for _ in range(80):
        n = rng.randint(1, 20)
        g = random_graph(n, rng.random(), rng)
        line = write_graph6(g)
        nxg = nx.from_graph6_bytes(line.encode("ascii"))
        assert sorted(tuple(sorted(e)) for e in nxg.edges()) == g.edges()
        assert nxg.number_of_nodes() == g.n
        # and decode what networkx encodes
        nx_line = nx.to_graph6_bytes(nxg, header=False).decode("ascii").strip()
        assert parse_graph6(nx_line) == g


def test_graph6_large_roundtrip():
    rng = random.Random(3)
    g = random_graph(62, 0.5, rng)
    assert parse_graph6(write_graph6(g)) == g


def test_iter_graph6_skips_header_and_blanks():
    lines = [">>graph6<<\n", "C~\n", "\n", "D??\n"]
    graphs = list(iter_graph6(lines))
    assert graphs == [complete_graph(4), Graph.empty(5)]


# --- coloring oracles --------------------------------------------------------


def test_coloring_fixtures():
    assert not is_3colorable(complete_graph(4))
    assert not is_3colorable(wheel(7))
    assert is_3colorable(Graph.empty(5))
    witness = find_3coloring(wheel(6))
    assert witness is not None and witness.is_proper_for(wheel(6))


def test_coloring_cap():
    with pytest.raises(CapacityError):
        is_3colorable(Graph.empty(25))
    assert is_3colorable(Graph.empty(25), cap=25)


def test_coloring_matches_exhaustive_small():
    for n in range(1, 6):
        for g in enumerate_nonisomorphic(n):
            got = find_3coloring(g)
            assert (got is not None) == exhaustive_3colorable(g)
            if got is not None:
                assert got.is_proper_for(g)


def test_coloring_matches_exhaustive_random():
    rng = random.Random(11)
    for _ in range(60):
        g = random_graph(7, rng.random(), rng)
        assert is_3colorable(g) == exhaustive_3colorable(g)


def test_4critical_fixtures():
    assert is_4critical(complete_graph(4))
    assert is_4critical(moser_spindle())
    assert is_4critical(wheel(5))  # confirmed below by brute force
    assert not is_4critical(wheel(4))
    assert not is_4critical(complete_graph(5))


def test_4critical_by_brute_force():
    w5 = wheel(5)
    assert not exhaustive_3colorable(w5)
    for u, v in w5.edges():
        assert exhaustive_3colorable(w5.delete_edge(u, v))
    # edge-criticality alone is not enough: isolated padding must not count
    padded = Graph.from_edges(5, complete_graph(4).edges())
    assert not exhaustive_3colorable(padded)
    for u, v in padded.edges():
        assert exhaustive_3colorable(padded.delete_edge(u, v))
    assert not is_4critical(padded)


def test_4critical_implies_definition():
    for g in (complete_graph(4), wheel(5), moser_spindle()):
        assert not is_3colorable(g)
        for u, v in g.edges():
            assert is_3colorable(g.delete_edge(u, v))


# --- short cycles -------------------------------------------------------------


def test_edge_on_short_cycle():
    m = moser_spindle()
    assert edge_on_short_cycle(m, 0, 6) == (False, False)
    k4 = complete_graph(4)
    for u, v in k4.edges():
        assert edge_on_short_cycle(k4, u, v) == (True, True)
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert edge_on_short_cycle(p3, 0, 1) == (False, False)
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert edge_on_short_cycle(c4, 0, 1) == (False, True)
    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert edge_on_short_cycle(c5, 0, 1) == (False, False)
    with pytest.raises(ValueError):
        edge_on_short_cycle(p3, 0, 2)


def test_moser_unique_short_cycle_free_edge():
    m = moser_spindle()
    free = [e for e in m.edges() if edge_on_short_cycle(m, *e) == (False, False)]
    assert free == [(0, 6)]


# --- canonical forms and enumeration ------------------------------------------


def test_enumeration_counts():
    known = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
    for n, count in known.items():
        assert len(list(enumerate_nonisomorphic(n))) == count
    with pytest.raises(CapacityError):
        next(enumerate_nonisomorphic(8))
    with pytest.raises(ValueError):
        next(enumerate_nonisomorphic(0))


def test_enumeration_agrees_with_direct_canonicalization():
    # dedup the whole labeled space through the independent per-graph
    # minimizer and compare class counts
    for n in (3, 4, 5):
        length = n * (n - 1) // 2
        forms = {
            canonical_form(mask_to_graph(n, mask)).bits
            for mask in range(1 << length)
        }
        reps = list(enumerate_nonisomorphic(n))
        assert len(forms) == len(reps)
        assert sorted(forms) == [graph_to_mask(g) for g in reps]


def test_representatives_are_canonical():
    for n in (4, 5, 6):
        for g in enumerate_nonisomorphic(n):
            assert canonical_form(g).bits == graph_to_mask(g)


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 7)
        g = random_graph(n, rng.random(), rng)
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(g.relabel(perm))
    with pytest.raises(CapacityError):
        canonical_form(Graph.empty(8))


def test_canonical_form_separates_nonisomorphic():
    reps = list(enumerate_nonisomorphic(5))
    forms = {canonical_form(g).bits for g in reps}
    assert len(forms) == len(reps)


# --- constructions -------------------------------------------------------------


def test_hajos_join_of_two_k4():
    k4 = complete_graph(4)
    j = hajos_join(k4, (0, 1), k4, (0, 1))
    assert j.n == 7
    assert j.num_edges == 11
    assert not j.has_edge(0, 1)
    assert not is_3colorable(j)
    assert is_4critical(j)
    with pytest.raises(ValueError):
        hajos_join(k4, (0, 1), wheel(4), (0, 2))


def test_hajos_join_preserves_non3colorability():
    # both wheels odd, joined along rim edges
    a, b = wheel(5), wheel(5)
    j = hajos_join(a, (0, 1), b, (1, 2))
    assert j.n == 11
    assert not is_3colorable(j)


def test_identify_nonadjacent():
    g = Graph.empty(2)
    assert identify_nonadjacent(g, 0, 1) == Graph.empty(1)
    k4 = complete_graph(4)
    with pytest.raises(ValueError):
        identify_nonadjacent(k4, 0, 1)
    with pytest.raises(ValueError):
        identify_nonadjacent(k4, 2, 2)
    j = hajos_join(k4, (0, 1), k4, (0, 1))
    pairs = [
        (u, v)
        for u in range(j.n)
        for v in range(u + 1, j.n)
        if not j.has_edge(u, v)
    ]
    for u, v in pairs:
        merged = identify_nonadjacent(j, u, v)
        assert merged.n == j.n - 1
        assert not is_3colorable(merged)
