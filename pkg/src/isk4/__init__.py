"""Structure checks and certified 3-coloring for {ISK4, triangle}-free graphs."""

from .coloring import ColorResult, chromatic_oracle, three_color, verify_coloring
from .decompose import DecompositionStep, decomposition_step, decomposition_tree, find_clique_cutset
from .formats import emit_graph6, parse_edge_list, parse_graph6, read_graphs
from .graph import Graph, GraphError, build_graph, induced_subgraph
from .recognizers import (
    class_membership,
    find_isk4,
    find_k33_subgraph,
    find_linkage,
    find_triangle,
    is_series_parallel,
)
from .search import Budget, SearchBudgetExceeded
from .sparse_cycles import minimal_k13, sparse_cycle
from .wheels import Wheel, find_proper_wheel, find_wheel, is_proper_wheel

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Graph",
    "GraphError",
    "build_graph",
    "induced_subgraph",
    "parse_graph6",
    "emit_graph6",
    "parse_edge_list",
    "read_graphs",
    "Budget",
    "SearchBudgetExceeded",
    "find_triangle",
    "find_isk4",
    "find_k33_subgraph",
    "find_linkage",
    "is_series_parallel",
    "class_membership",
    "Wheel",
    "find_wheel",
    "find_proper_wheel",
    "is_proper_wheel",
    "DecompositionStep",
    "decomposition_step",
    "decomposition_tree",
    "find_clique_cutset",
    "ColorResult",
    "three_color",
    "verify_coloring",
    "chromatic_oracle",
    "sparse_cycle",
    "minimal_k13",
]
