"""Deciding d-cuts with a bounded number of crossing edges.

A d-cut is a two-sided vertex partition in which every vertex has at most
d neighbors on the far side; for d=1 this is a matching cut.  The package
answers whether a graph admits one with at most k crossing edges, via a
dynamic program over verified tree decompositions, and ships a
brute-force oracle to check it against at desk scale.
"""

from .graph import (Bipartition, DisconnectedGraph, Graph, InvalidBipartition,
                    SubgraphView, connected_components, edge_cut,
                    global_min_cut, global_min_cut_at_most, is_connected,
                    is_d_cut, is_d_matching)
from .multisets import EMPTY_MULTISET, VertexMultiset, bounded_multisets
from .decomposition import (DecompositionError, NodeContext,
                            RootedDecomposition, VerificationReport,
                            construct, derive_contexts, parse, serialize,
                            verify)
from .setfamily import (SubsetFamily, build_exhaustive, build_randomized,
                        find_covering_family, heuristic_rounds,
                        verify_covering)
from .oracle import OracleResult, brute_force_min_dcut, oracle_decide
from .solver import (DPSolver, INFEASIBLE, SolveOptions, SolveResult,
                     WitnessCertificationError, solve)
from .dimacs import DimacsParseError, format_graph, parse_graph
from .generators import (generate_instance, gnm_random, grid_graph,
                         two_cliques_bridged)

__all__ = [
    "Bipartition", "DisconnectedGraph", "Graph", "InvalidBipartition",
    "SubgraphView", "connected_components", "edge_cut", "global_min_cut",
    "global_min_cut_at_most", "is_connected", "is_d_cut", "is_d_matching",
    "EMPTY_MULTISET", "VertexMultiset", "bounded_multisets",
    "DecompositionError", "NodeContext", "RootedDecomposition",
    "VerificationReport", "construct", "derive_contexts", "parse",
    "serialize", "verify",
    "SubsetFamily", "build_exhaustive", "build_randomized",
    "find_covering_family", "heuristic_rounds", "verify_covering",
    "OracleResult", "brute_force_min_dcut", "oracle_decide",
    "DPSolver", "INFEASIBLE", "SolveOptions", "SolveResult",
    "WitnessCertificationError", "solve",
    "DimacsParseError", "format_graph", "parse_graph",
    "generate_instance", "gnm_random", "grid_graph", "two_cliques_bridged",
]

__version__ = "0.1.0"
