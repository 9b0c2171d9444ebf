"""Simple graphs: forests, stable sets, canonical forms and enumeration"""

from .canon import canon_graph, canonical_graph
from .enumerate import GraphFilter, enumerate_graphs, iter_graphs
from .graph import (
    SimpleGraph,
    disjoint_union,
    parse_graph,
    parse_graphs,
    serialize_graph,
    serialize_graphs,
)
from .search import (
    find_induced_forest,
    has_induced_forest,
    largest_induced_forest,
    max_clique,
    max_stable_set,
)

__all__ = [
    "GraphFilter",
    "SimpleGraph",
    "canon_graph",
    "canonical_graph",
    "disjoint_union",
    "enumerate_graphs",
    "find_induced_forest",
    "has_induced_forest",
    "iter_graphs",
    "largest_induced_forest",
    "max_clique",
    "max_stable_set",
    "parse_graph",
    "parse_graphs",
    "serialize_graph",
    "serialize_graphs",
]
