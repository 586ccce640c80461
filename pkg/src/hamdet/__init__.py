"""Randomized detection of Hamiltonian cycles in undirected graphs, and exact
minimum-weight tours for small positive integer weights, by evaluating sums of
determinants over GF(2^k) indexed by subsets of a label set.

The detection algorithms are Monte Carlo with one-sided error: a "hamiltonian"
verdict is always correct; a miss happens with probability that shrinks
exponentially in the number of runs.
"""

from .gf2k import FieldContext, FieldElement, find_generator, get_field
from .graphs import Graph, WeightedGraph, parse_graph
from .config import DetectionConfig, DetectionResult, RunReport
from .bipartite import BipartiteInstance, detect_bipartite
from .general import detect_general, detect_with_independent_set
from .tsp import solve_tsp

__version__ = "0.1.0"

__all__ = [
    "FieldContext",
    "FieldElement",
    "find_generator",
    "get_field",
    "Graph",
    "WeightedGraph",
    "parse_graph",
    "DetectionConfig",
    "DetectionResult",
    "RunReport",
    "BipartiteInstance",
    "detect_bipartite",
    "detect_general",
    "detect_with_independent_set",
    "solve_tsp",
    "__version__",
]
