"""Exact invariants of Stanley-Reisner rings of independence complexes of circulant graphs."""

from .circulant import (
    CirculantSpec,
    Graph,
    build_circulant,
    complement_spec,
    edge_count_formula,
    induced_subgraph,
    is_chordal,
    is_connected,
)
from .complex import (
    Connectivity,
    SimplicialComplex,
    f_vector,
    h_vector,
    independence_complex,
    krull_dimension,
    link,
    pure_skeleton,
    reduced_euler_characteristic,
    restriction,
    skeleton_connectivity,
)
from .errors import BettiCapError, CirculantError, FaceLimitError, ResourceLimitError, SpecError
from .homology import RATIONALS, FieldSpec, boundary_matrices, reduced_betti_numbers
from .invariants import AlgebraicReport, BettiTable, HilbertData, algebraic_report, betti_table_hochster, hilbert_data, regularity

__version__ = "0.1.0"

__all__ = [
    "AlgebraicReport", "BettiCapError", "BettiTable", "CirculantError", "CirculantSpec",
    "Connectivity", "FaceLimitError", "FieldSpec", "Graph", "HilbertData", "RATIONALS",
    "ResourceLimitError", "SimplicialComplex", "SpecError", "algebraic_report",
    "betti_table_hochster", "boundary_matrices", "build_circulant", "complement_spec",
    "edge_count_formula", "f_vector", "h_vector", "hilbert_data", "independence_complex",
    "induced_subgraph", "is_chordal", "is_connected", "krull_dimension", "link",
    "pure_skeleton", "reduced_betti_numbers", "reduced_euler_characteristic", "regularity",
    "restriction", "skeleton_connectivity",
]
