"""Certificates of non-3-colorability over GF(2), and the tools around them.

The library decides whether a graph's non-3-colorability admits a
low-degree Nullstellensatz certificate for the cubic encoding
(x_i^3 = 1 per vertex, x_i^2 + x_i*x_j + x_j^2 = 0 per edge) with
coefficients in GF(2), by two routes that cross-validate each other:
the general degree-by-degree linear-algebra search, and the
combinatorial length-2-path-cover characterization of degree 1.
"""

from .errors import CapacityError, Graph6Error
from .gf2 import Gf2Matrix, SolveResult, in_span, rank, solve
from .graphs import (
    CanonicalForm,
    Coloring,
    Graph,
    canonical_form,
    complete_graph,
    edge_on_short_cycle,
    enumerate_nonisomorphic,
    find_3coloring,
    hajos_join,
    identify_nonadjacent,
    is_3colorable,
    is_4critical,
    iter_graph6,
    moser_spindle,
    parse_graph6,
    wheel,
    write_graph6,
)
from .nulla import (
    CensusResult,
    CensusRow,
    Certificate,
    CertificateSystem,
    DegreeReport,
    build_certificate_system,
    census,
    certificate_search,
    degree1_search_fast,
    nulla_degree,
)
from .pathcover import (
    CoverCheck,
    ObstructionWitness,
    Path2,
    PathCover,
    certificate_to_cover,
    cover_to_certificate,
    endpoint_parity_predicates,
    enumerate_paths2,
    path_cover_search,
    short_cycle_obstruction,
    verify_cover,
)
from .polynomials import (
    BayerSystem,
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

__version__ = "0.1.0"
