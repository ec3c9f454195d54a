"""Exact skew characteristic polynomials and skew energy of oriented graphs."""

from .graph import (
    BicyclicShape,
    Graph,
    GraphError,
    LinearSubgraph,
    OrientedGraph,
    all_cycles,
    classify_bicyclic,
    delete,
    diameter,
    evenly_linear_subgraphs,
    in_class_B,
)
from .orientations import cycle_parity, orientation_class_reps, switch, switching_equivalent
from .spectrum import (
    QuasiOrder,
    SkewPolynomial,
    char_poly,
    char_poly_expansion,
    char_poly_oracle,
    char_poly_recurrence_edge,
    char_poly_recurrence_vertex,
    quasi_compare,
    skew_energy_integral,
    skew_energy_spectral,
)

__version__ = "0.1.0"

__all__ = [
    "BicyclicShape",
    "Graph",
    "GraphError",
    "LinearSubgraph",
    "OrientedGraph",
    "QuasiOrder",
    "SkewPolynomial",
    "all_cycles",
    "char_poly",
    "char_poly_expansion",
    "char_poly_oracle",
    "char_poly_recurrence_edge",
    "char_poly_recurrence_vertex",
    "classify_bicyclic",
    "cycle_parity",
    "delete",
    "diameter",
    "evenly_linear_subgraphs",
    "in_class_B",
    "orientation_class_reps",
    "quasi_compare",
    "skew_energy_integral",
    "skew_energy_spectral",
    "switch",
    "switching_equivalent",
]
