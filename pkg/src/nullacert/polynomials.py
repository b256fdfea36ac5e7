"""Multivariate polynomials over GF(2) and the cubic 3-coloring encoding.

A polynomial is a finite set of monomials: every present term has
coefficient 1, adding a term twice cancels it, and the zero polynomial
is the empty set.  Nothing here reduces modulo an ideal; degree
bookkeeping for certificates happens in the full polynomial ring.

Bayer's encoding of 3-colorability uses one generator per vertex
(x_i^3 + 1) and one per edge (x_i^2 + x_i*x_j + x_j^2); a graph is
3-colorable exactly when that system has a common root in the algebraic
closure, and a certificate of infeasibility is a family of multipliers
alpha with sum(alpha_f * f) = 1.

The module also builds three alternative degree-1 systems whose spans
contain 1 exactly when the original system has a degree-1 certificate,
plus the rewriting identities that convert between them.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graphs import Graph

#: Generator key: ("vertex", i) or ("edge", (i, j)) with i < j.
GenKey = tuple


@dataclass(frozen=True)
class Monomial:
    """Exponent-vector monomial; ordered graded-lexicographically."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(self.exponents) != len(other.exponents):
            raise ValueError("variable counts differ")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def grlex_key(self) -> tuple:
        return (self.degree, self.exponents)

    def __lt__(self, other: "Monomial") -> bool:
        return self.grlex_key() < other.grlex_key()

    def render(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Gf2Polynomial:
    """Set-of-monomials polynomial with GF(2) coefficients."""

    nvars: int
    terms: frozenset[Monomial]

    def __post_init__(self):
        for t in self.terms:
            if len(t.exponents) != self.nvars:
                raise ValueError("term variable count does not match polynomial")

    @classmethod
    def zero(cls, nvars: int) -> "Gf2Polynomial":
        return cls(nvars, frozenset())

    @classmethod
    def one(cls, nvars: int) -> "Gf2Polynomial":
        return cls(nvars, frozenset({Monomial((0,) * nvars)}))

    @classmethod
    def from_exponents(
        cls, nvars: int, exponents: Iterable[tuple[int, ...]]
    ) -> "Gf2Polynomial":
        """Build from exponent tuples; repeated tuples cancel pairwise."""
        acc: set[Monomial] = set()
        for e in exponents:
            acc ^= {Monomial(tuple(e))}
        return cls(nvars, frozenset(acc))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == frozenset({Monomial((0,) * self.nvars)})

    @property
    def degree(self) -> int:
        """Maximum term degree; 0 for the zero polynomial."""
        return max((t.degree for t in self.terms), default=0)

    def __add__(self, other: "Gf2Polynomial") -> "Gf2Polynomial":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        return Gf2Polynomial(self.nvars, self.terms ^ other.terms)

    def __mul__(self, other: "Gf2Polynomial") -> "Gf2Polynomial":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        acc: set[Monomial] = set()
        for a in self.terms:
            for b in other.terms:
                acc ^= {a * b}
        return Gf2Polynomial(self.nvars, frozenset(acc))

    def render(self) -> str:
        """Stable human-readable form, terms in descending graded-lex order."""
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=Monomial.grlex_key, reverse=True)
        return " + ".join(t.render() for t in ordered)

    def __str__(self) -> str:
        return self.render()


def variable(nvars: int, i: int, power: int = 1) -> Gf2Polynomial:
    e = [0] * nvars
    e[i] = power
    return Gf2Polynomial(nvars, frozenset({Monomial(tuple(e))}))


def _term(nvars: int, *pairs: tuple[int, int]) -> tuple[int, ...]:
    e = [0] * nvars
    for var, power in pairs:
        e[var] += power
    return tuple(e)


def vertex_generator(nvars: int, i: int) -> Gf2Polynomial:
    """x_i^3 + 1 (over GF(2), the -1 of the cube-root constraint is +1)."""
    return Gf2Polynomial.from_exponents(
        nvars, [_term(nvars, (i, 3)), _term(nvars)]
    )


def edge_generator(nvars: int, i: int, j: int) -> Gf2Polynomial:
    """x_i^2 + x_i*x_j + x_j^2, the per-edge color-inequality generator."""
    return Gf2Polynomial.from_exponents(
        nvars,
        [_term(nvars, (i, 2)), _term(nvars, (i, 1), (j, 1)), _term(nvars, (j, 2))],
    )


def edge_unit_poly(nvars: int, i: int, j: int) -> Gf2Polynomial:
    """x_i^2*x_j + x_i*x_j^2 + 1; symmetric in i and j."""
    return Gf2Polynomial.from_exponents(
        nvars,
        [
            _term(nvars, (i, 2), (j, 1)),
            _term(nvars, (i, 1), (j, 2)),
            _term(nvars),
        ],
    )


def scaled_edge_poly(nvars: int, i: int, j: int, k: int) -> Gf2Polynomial:
    """x_k * (x_i^2 + x_i*x_j + x_j^2), written out term by term."""
    return Gf2Polynomial.from_exponents(
        nvars,
        [
            _term(nvars, (i, 2), (k, 1)),
            _term(nvars, (i, 1), (j, 1), (k, 1)),
            _term(nvars, (j, 2), (k, 1)),
        ],
    )


def path_combo_poly(nvars: int, i: int, j: int, k: int) -> Gf2Polynomial:
    """x_i^2*x_k + x_j^2*x_k + x_i*x_j^2 + x_i*x_k^2 for a path i-j-k.

    Symmetric under swapping the endpoints i and k, so one length-2 path
    determines one polynomial.
    """
    return Gf2Polynomial.from_exponents(
        nvars,
        [
            _term(nvars, (i, 2), (k, 1)),
            _term(nvars, (j, 2), (k, 1)),
            _term(nvars, (i, 1), (j, 2)),
            _term(nvars, (i, 1), (k, 2)),
        ],
    )


@dataclass(frozen=True)
class BayerSystem:
    """The vertex and edge generators of a graph, in vertex/edge order."""

    n: int
    edges: tuple[tuple[int, int], ...]
    vertex_polys: tuple[Gf2Polynomial, ...]
    edge_polys: tuple[Gf2Polynomial, ...]

    def generator_keys(self) -> list[GenKey]:
        keys: list[GenKey] = [("vertex", i) for i in range(self.n)]
        keys.extend(("edge", e) for e in self.edges)
        return keys

    def generators(self) -> list[tuple[GenKey, Gf2Polynomial]]:
        gens = list(zip((("vertex", i) for i in range(self.n)), self.vertex_polys))
        gens.extend(zip((("edge", e) for e in self.edges), self.edge_polys))
        return gens


def build_bayer_system(g: Graph) -> BayerSystem:
    edges = tuple(g.edges())
    return BayerSystem(
        n=g.n,
        edges=edges,
        vertex_polys=tuple(vertex_generator(g.n, i) for i in range(g.n)),
        edge_polys=tuple(edge_generator(g.n, i, j) for i, j in edges),
    )


@dataclass(frozen=True, eq=False)
class Certificate:
    """Multipliers witnessing sum(alpha_f * f) = 1 at a stated degree bound."""

    graph: Graph
    degree: int
    multipliers: dict

    @property
    def size(self) -> int:
        """Total number of monomials across all multipliers."""
        return sum(len(p.terms) for p in self.multipliers.values())


def make_certificate(
    g: Graph, degree: int, parts: Mapping[GenKey, Gf2Polynomial]
) -> Certificate:
    """Certificate with every generator keyed, filling zeros for absentees."""
    system = build_bayer_system(g)
    keys = system.generator_keys()
    keyset = set(keys)
    for key in parts:
        if key not in keyset:
            raise ValueError(f"multiplier key {key!r} is not a generator of the graph")
    zero = Gf2Polynomial.zero(g.n)
    return Certificate(g, degree, {key: parts.get(key, zero) for key in keys})


def verify_certificate(system: BayerSystem, cert: Certificate) -> bool:
    """Expand sum(alpha_f * f) symbolically; true iff it equals 1 and every
    multiplier stays within the certificate's degree bound."""
    keys = system.generator_keys()
    if set(cert.multipliers) != set(keys):
        raise ValueError("multipliers must be keyed exactly by the system generators")
    if any(
        not p.is_zero and p.degree > cert.degree for p in cert.multipliers.values()
    ):
        return False
    total = Gf2Polynomial.zero(system.n)
    for key, gen in system.generators():
        total = total + cert.multipliers[key] * gen
    return total.is_one


# ---------------------------------------------------------------------------
# Alternative degree-1 systems
#
# Three families of polynomials whose GF(2) spans contain 1 exactly when
# the original system admits a degree-1 certificate:
#
#   "scaled-original":  x_i^3 + 1 for every vertex, plus x_k * (edge
#                       generator) for every edge and every vertex k.
#   "edge-unit-scaled": the edge-unit cubics x_i^2*x_j + x_i*x_j^2 + 1,
#                       plus x_k * (edge generator) for k outside the edge.
#   "edge-unit-path":   the edge-unit cubics, plus one path polynomial
#                       per ordered length-2 path pattern (i, j, k).
# ---------------------------------------------------------------------------

DEGREE1_VARIANTS = ("scaled-original", "edge-unit-scaled", "edge-unit-path")


def _degree1_family_labeled(
    g: Graph, variant: str
) -> list[tuple[tuple, Gf2Polynomial]]:
    n = g.n
    edges = g.edges()
    family: list[tuple[tuple, Gf2Polynomial]] = []
    if variant == "scaled-original":
        for i in range(n):
            family.append((("cubic", i), vertex_generator(n, i)))
        for i, j in edges:
            for k in range(n):
                family.append(
                    (("scaled-edge", (i, j, k)), scaled_edge_poly(n, i, j, k))
                )
    elif variant == "edge-unit-scaled":
        for i, j in edges:
            family.append((("edge-unit", (i, j)), edge_unit_poly(n, i, j)))
        for i, j in edges:
            for k in range(n):
                if k not in (i, j):
                    family.append(
                        (("scaled-edge", (i, j, k)), scaled_edge_poly(n, i, j, k))
                    )
    elif variant == "edge-unit-path":
        for i, j in edges:
            family.append((("edge-unit", (i, j)), edge_unit_poly(n, i, j)))
        # ordered path patterns (i, j, k): j adjacent to both, i != k
        for i in range(n):
            for j in g.neighbors(i):
                for k in g.neighbors(j):
                    if k != i:
                        family.append(
                            (("path", (i, j, k)), path_combo_poly(n, i, j, k))
                        )
    else:
        raise ValueError(
            f"unknown variant {variant!r}; expected one of {DEGREE1_VARIANTS}"
        )
    return family


def degree1_family(g: Graph, variant: str) -> list[Gf2Polynomial]:
    """The polynomials of one alternative degree-1 system, in stable order."""
    return [p for _, p in _degree1_family_labeled(g, variant)]


def rewrite_identities_hold(g: Graph, i: int, j: int, k: int) -> bool:
    """Check the three exact identities that tie the families together.

    For adjacent pairs (i, j) and (j, k):
      path polynomial (i,j,k)  =  x_k*(edge ij) + x_i*(edge jk)
      edge-unit (i, j)         =  x_j*(edge ij) + (x_j^3 + 1)
      scaled edge (i, j, k)    =  x_k*(edge ij)
    All additions are over GF(2); the check multiplies everything out.
    """
    if not (g.has_edge(i, j) and g.has_edge(j, k)):
        raise ValueError(f"({i},{j}) and ({j},{k}) must both be edges")
    n = g.n
    e_ij = edge_generator(n, i, j)
    e_jk = edge_generator(n, j, k)
    ok_path = path_combo_poly(n, i, j, k) == (
        variable(n, k) * e_ij + variable(n, i) * e_jk
    )
    ok_unit = edge_unit_poly(n, i, j) == (
        variable(n, j) * e_ij + vertex_generator(n, j)
    )
    ok_scaled = scaled_edge_poly(n, i, j, k) == variable(n, k) * e_ij
    return ok_path and ok_unit and ok_scaled


def lift_to_bayer(n: int, labels: Iterable[tuple]) -> dict:
    """Rewrite a selection of edge-unit / path polynomials as degree-1
    multipliers on the original generators, via the identities above.

    Each ("edge-unit", (a, b)) contributes x_max to the edge multiplier
    and the constant 1 to that vertex's multiplier; each ("path",
    (i, j, k)) contributes x_k to edge (i, j) and x_i to edge (j, k).
    Contributions accumulate by cancellation.
    """
    acc: dict = defaultdict(lambda: Gf2Polynomial.zero(n))
    for kind, data in labels:
        if kind == "edge-unit":
            a, b = min(data), max(data)
            acc[("edge", (a, b))] = acc[("edge", (a, b))] + variable(n, b)
            acc[("vertex", b)] = acc[("vertex", b)] + Gf2Polynomial.one(n)
        elif kind == "path":
            i, j, k = data
            e1 = (min(i, j), max(i, j))
            e2 = (min(j, k), max(j, k))
            acc[("edge", e1)] = acc[("edge", e1)] + variable(n, k)
            acc[("edge", e2)] = acc[("edge", e2)] + variable(n, i)
        else:
            raise ValueError(f"cannot lift family member of kind {kind!r}")
    return dict(acc)
