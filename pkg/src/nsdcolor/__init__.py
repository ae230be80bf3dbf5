"""Neighbor-sum-distinguishing colorings of connected cubic graphs.

Constructive edge colorings from {1,2,3,4} and total colorings from {1,2},
with an exact oracle, exhaustive and random cubic-graph generation, a
graph6 codec, and a corpus harness exposed over a CLI and an HTTP service.
"""

__version__ = "0.1.0"

from .bipartition import Decomposition, Partition, decompose, max_mpartite_subgraph
from .canon import (ENUMERABLE_N, are_isomorphic, canonical_code,
                    canonical_graph, enumerate_cubic)
from .edge_coloring import (constructive_edge_coloring, search_edge_coloring,
                            sigma, verify_nsd)
from .graph6 import emit_graph6, parse_graph6
from .graphs import Graph, edge, is_connected, is_cubic, random_cubic
from .oracle import ExactResult, exact_gndi, exact_tgndi
from .outcome import SolveOutcome, VerificationReport
from .pipeline import (RunOptions, RunSummary, enumerate_corpus,
                       generate_corpus, run_corpus, solve_one)
from .total_coloring import (TotalColoring, constructive_total_coloring,
                             search_total_coloring, total_sums, verify_total)

__all__ = [
    "__version__",
    "Graph", "edge", "is_cubic", "is_connected", "random_cubic",
    "parse_graph6", "emit_graph6",
    "ENUMERABLE_N", "enumerate_cubic", "canonical_code", "canonical_graph",
    "are_isomorphic",
    "Partition", "Decomposition", "max_mpartite_subgraph", "decompose",
    "sigma", "verify_nsd", "constructive_edge_coloring", "search_edge_coloring",
    "TotalColoring", "total_sums", "verify_total",
    "constructive_total_coloring", "search_total_coloring",
    "ExactResult", "exact_gndi", "exact_tgndi",
    "SolveOutcome", "VerificationReport",
    "RunOptions", "RunSummary", "run_corpus", "solve_one",
    "generate_corpus", "enumerate_corpus",
]
