"""Exact v-numbers, regularity, and Cohen-Macaulay classification of edge ideals."""

from .clutters import Clutter, Graph, ZeroIdealError
from .classify import (
    CrossRouteError,
    InvariantReport,
    edge_criticality,
    full_report,
    has_linear_resolution,
    is_cm_graph,
    is_edge_critical,
    is_w2,
    symbolic_square_cm,
    symbolic_square_cm_beta2,
)
from .complexes import (
    Field,
    HomologyProfile,
    SimplicialComplex,
    independence_complex,
    is_cohen_macaulay,
    is_vertex_decomposable,
    one_dim_diameter,
    reduced_homology_ranks,
    regularity,
    regularity_of_ideal,
    stanley_reisner_complex,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    PrimeCover,
    associated_primes,
    cover_ideal,
    edge_ideal,
    symbolic_power,
    v_number_algebraic,
)
from .vertexsets import AmbientMismatchError, VertexSet

__all__ = [
    "AmbientMismatchError",
    "Clutter",
    "CrossRouteError",
    "Field",
    "Graph",
    "HomologyProfile",
    "InvariantReport",
    "Monomial",
    "MonomialIdeal",
    "PrimeCover",
    "SimplicialComplex",
    "VertexSet",
    "ZeroIdealError",
    "associated_primes",
    "cover_ideal",
    "edge_criticality",
    "edge_ideal",
    "full_report",
    "has_linear_resolution",
    "independence_complex",
    "is_cm_graph",
    "is_cohen_macaulay",
    "is_edge_critical",
    "is_vertex_decomposable",
    "is_w2",
    "one_dim_diameter",
    "reduced_homology_ranks",
    "regularity",
    "regularity_of_ideal",
    "stanley_reisner_complex",
    "symbolic_power",
    "symbolic_square_cm",
    "symbolic_square_cm_beta2",
    "v_number_algebraic",
]
