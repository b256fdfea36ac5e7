import random

import pytest

from nullacert.graphs import Graph, complete_graph, moser_spindle, wheel
from nullacert.polynomials import (
    Gf2Polynomial,
    Monomial,
    build_bayer_system,
    degree1_family,
    edge_generator,
    edge_unit_poly,
    lift_to_bayer,
    make_certificate,
    path_combo_poly,
    rewrite_identities_hold,
    scaled_edge_poly,
    variable,
    verify_certificate,
    vertex_generator,
)


def random_poly(rng, nvars, max_terms=5, max_exp=3):
    terms = [
        tuple(rng.randint(0, max_exp) for _ in range(nvars))
        for _ in range(rng.randint(0, max_terms))
    ]
    return Gf2Polynomial.from_exponents(nvars, terms)


def test_monomial_basics():
    m = Monomial((2, 0, 1))
    assert m.degree == 3
    assert (m * Monomial((0, 1, 0))).exponents == (2, 1, 1)
    assert m.render() == "x1^2*x3"
    assert Monomial((0, 0, 0)).render() == "1"
    with pytest.raises(ValueError):
        Monomial((1, -1))
    assert Monomial((0, 2)) < Monomial((1, 2))  # graded before lex


def test_char2_addition():
    rng = random.Random(0)
    for _ in range(100):
        p = random_poly(rng, 3)
        assert (p + p).is_zero
    x = variable(1, 0)
    one = Gf2Polynomial.one(1)
    assert (x + one) * (x + one) == variable(1, 0, 2) + one  # (x+1)^2 = x^2+1
    assert (random_poly(rng, 2) * Gf2Polynomial.zero(2)).is_zero


def test_frobenius_square():
    xi, xj = variable(4, 1), variable(4, 3)
    assert (xi + xj) * (xi + xj) == variable(4, 1, 2) + variable(4, 3, 2)


def test_ring_laws_random():
    rng = random.Random(1)
    for _ in range(150):
        p, q, r = (random_poly(rng, 3, max_terms=4, max_exp=2) for _ in range(3))
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


def test_render_stable_order():
    poly = Gf2Polynomial.from_exponents(3, [(0, 0, 0), (2, 0, 1), (0, 2, 1)])
    assert poly.render() == "x1^2*x3 + x2^2*x3 + 1"
    assert Gf2Polynomial.zero(2).render() == "0"
    assert str(Gf2Polynomial.one(2)) == "1"


def test_bayer_system_counts():
    sys4 = build_bayer_system(complete_graph(4))
    assert len(sys4.vertex_polys) == 4 and len(sys4.edge_polys) == 6
    sys0 = build_bayer_system(Graph.empty(3))
    assert len(sys0.vertex_polys) == 3 and len(sys0.edge_polys) == 0
    sysm = build_bayer_system(moser_spindle())
    assert len(sysm.vertex_polys) == 7 and len(sysm.edge_polys) == 11


def test_generator_shapes():
    v = vertex_generator(2, 0)
    assert v == Gf2Polynomial.from_exponents(2, [(3, 0), (0, 0)])
    e = edge_generator(3, 0, 2)
    assert e == Gf2Polynomial.from_exponents(3, [(2, 0, 0), (1, 0, 1), (0, 0, 2)])


def test_path_poly_endpoint_symmetric():
    for i, j, k in [(0, 1, 2), (2, 0, 3), (3, 2, 1)]:
        assert path_combo_poly(4, i, j, k) == path_combo_poly(4, k, j, i)


def test_rewrite_identities():
    m = moser_spindle()
    for i in range(m.n):
        for j in m.neighbors(i):
            for k in m.neighbors(j):
                if k != i:
                    assert rewrite_identities_hold(m, i, j, k)
    k4 = complete_graph(4)
    assert rewrite_identities_hold(k4, 0, 1, 2)
    with pytest.raises(ValueError):
        rewrite_identities_hold(moser_spindle(), 0, 6, 1)  # (6,1) not an edge


def test_rewrite_identity_expansions_cancel():
    n = 5
    i, j, k = 1, 3, 4
    # edge-unit + x_j*edge + vertex cubic telescopes to zero
    total = (
        edge_unit_poly(n, i, j)
        + variable(n, j) * edge_generator(n, i, j)
        + vertex_generator(n, j)
    )
    assert total.is_zero
    assert (scaled_edge_poly(n, i, j, k) + variable(n, k) * edge_generator(n, i, j)).is_zero
    assert (
        path_combo_poly(n, i, j, k)
        + scaled_edge_poly(n, i, j, k)
        + scaled_edge_poly(n, j, k, i)
    ).is_zero


def test_degree1_family_counts():
    k3 = complete_graph(3)
    fam = degree1_family(k3, "edge-unit-path")
    # 3 edge units + one path polynomial per ordered pattern (6 of them)
    assert len(fam) == 3 + 6
    single = Graph.from_edges(2, [(0, 1)])
    assert len(degree1_family(single, "edge-unit-scaled")) == 1
    assert len(degree1_family(single, "edge-unit-path")) == 1
    empty = Graph.empty(3)
    assert len(degree1_family(empty, "scaled-original")) == 3  # vertex cubics only
    assert degree1_family(empty, "edge-unit-scaled") == []
    assert degree1_family(empty, "edge-unit-path") == []
    with pytest.raises(ValueError):
        degree1_family(k3, "bogus")


def test_verify_certificate_zero_and_keys():
    g = complete_graph(4)
    system = build_bayer_system(g)
    zero_cert = make_certificate(g, 1, {})
    assert not verify_certificate(system, zero_cert)
    with pytest.raises(ValueError):
        make_certificate(g, 1, {("edge", (0, 9)): Gf2Polynomial.zero(4)})
    bad_keys = make_certificate(complete_graph(4).delete_edge(0, 1), 1, {})
    with pytest.raises(ValueError):
        verify_certificate(system, bad_keys)


def test_verify_certificate_degree_bound():
    g = Graph.from_edges(2, [(0, 1)])
    system = build_bayer_system(g)
    # x_0^3 + 1 times 1 leaves x_0^3 dangling; never equal to 1, but the
    # degree gate must trip first when the multiplier is too big
    cert = make_certificate(
        g, 0, {("vertex", 0): variable(2, 0)}
    )
    assert not verify_certificate(system, cert)


def test_lift_to_bayer_rejects_unknown():
    with pytest.raises(ValueError):
        lift_to_bayer(3, [("cubic", 0)])


def test_lift_matches_family_sum():
    # lifting a selection reproduces its polynomial sum over the generators
    g = wheel(5)
    labels = [("path", (0, 5, 1)), ("path", (1, 5, 2)), ("edge-unit", (0, 1))]
    parts = lift_to_bayer(g.n, labels)
    system = build_bayer_system(g)
    gens = dict(system.generators())
    total = Gf2Polynomial.zero(g.n)
    for key, mult in parts.items():
        total = total + mult * gens[key]
    expected = (
        path_combo_poly(g.n, 0, 5, 1)
        + path_combo_poly(g.n, 1, 5, 2)
        + edge_unit_poly(g.n, 0, 1)
    )
    assert total == expected
