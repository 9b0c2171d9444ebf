"""
Isomorph-free graph generation by canonical augmentation.

A graph on n + 1 vertices is generated from its parent by adding one vertex
and is kept only when deleting the last vertex of its canonical ordering
gives a graph isomorphic to that parent. Each isomorphism class therefore
has exactly one parent class, and siblings are deduplicated by canonical
form. Filters must be hereditary (closed under vertex deletion) so they can
prune every level.
"""

import logging
from dataclasses import dataclass
from functools import partial
from typing import Dict, Iterator, List, Optional, Tuple

from ..core.bitset import popcount
from ..core.config import GRAPH_ENUM_MAX_VERTICES
from ..core.errors import CapacityError, InputError
from ..core.parallel import run_sharded
from .canon import canon_graph, graph_labeling
from .graph import SimpleGraph, serialize_graph
from .search import has_induced_forest, max_stable_set

logger = logging.getLogger(__name__)

# Level at which the generation tree is dealt out to shards
SHARD_LEVEL = 4


@dataclass(frozen=True)
class GraphFilter:
    """Hereditary restrictions applied during generation"""

    max_edges: Optional[int] = None
    forbidden_forest: Optional[int] = None
    max_stable: Optional[int] = None

    def accepts(self, G: SimpleGraph) -> bool:
        if self.max_edges is not None and G.edge_count() > self.max_edges:
            return False
        if self.forbidden_forest is not None and G.n >= self.forbidden_forest:
            if has_induced_forest(G, self.forbidden_forest):
                return False
        if self.max_stable is not None and G.n > self.max_stable:
            return max_stable_set(G) <= self.max_stable
        return True


def children(G: SimpleGraph, graph_filter: GraphFilter) -> List[SimpleGraph]:
    """Canonical children of G, one per isomorphism class, in canonical order"""
    parent_canon = None
    edges = G.edge_count()
    budget = graph_filter.max_edges
    found: Dict[bytes, SimpleGraph] = {}
    for neighbours in range(1 << G.n):
        if budget is not None and edges + popcount(neighbours) > budget:
            continue
        child = G.add_vertex(neighbours)
        if not graph_filter.accepts(child):
            continue

        labeling = graph_labeling(child)
        last = labeling.ordering[-1]
        if last != G.n:
            if parent_canon is None:
                parent_canon = canon_graph(G)
            if canon_graph(child.delete_vertex(last)) != parent_canon:
                continue

        canonical = child.relabel(labeling.ordering)
        found.setdefault(serialize_graph(canonical).encode("ascii"), canonical)
    return [found[key] for key in sorted(found)]


def _descend(
    G: SimpleGraph, n: int, graph_filter: GraphFilter
) -> Iterator[SimpleGraph]:
    if G.n == n:
        yield G
        return
    for child in children(G, graph_filter):
        yield from _descend(child, n, graph_filter)


def _shard(
    n: int, graph_filter: GraphFilter, roots: List[SimpleGraph]
) -> List[Tuple[bytes, SimpleGraph]]:
    return [
        (canon_graph(G), G) for root in roots for G in _descend(root, n, graph_filter)
    ]


def _check(n: int, max_edges: Optional[int]) -> None:
    if n < 0:
        raise InputError("vertex count cannot be negative")
    if n > GRAPH_ENUM_MAX_VERTICES:
        raise CapacityError(
            f"graph enumeration supports n <= {GRAPH_ENUM_MAX_VERTICES}"
        )
    if n == GRAPH_ENUM_MAX_VERTICES and max_edges is None:
        raise CapacityError(f"n = {n} needs an edge bound")


def iter_graphs(
    n: int,
    max_edges: Optional[int] = None,
    forbidden_forest: Optional[int] = None,
    max_stable: Optional[int] = None,
) -> Iterator[SimpleGraph]:
    """Stream one graph per isomorphism class in generation order"""
    _check(n, max_edges)
    graph_filter = GraphFilter(max_edges, forbidden_forest, max_stable)
    yield from _descend(SimpleGraph.empty(0), n, graph_filter)


def enumerate_graphs(
    n: int,
    max_edges: Optional[int] = None,
    forbidden_forest: Optional[int] = None,
    max_stable: Optional[int] = None,
    shards: int = 1,
) -> List[SimpleGraph]:
    """One graph per isomorphism class on n vertices, sorted by canonical form.

    `max_edges` bounds the edge count and `forbidden_forest` = k keeps only
    graphs with no induced forest on k vertices; `max_stable` bounds the
    stable set number.
    """
    _check(n, max_edges)
    graph_filter = GraphFilter(max_edges, forbidden_forest, max_stable)

    level = [SimpleGraph.empty(0)]
    while level and level[0].n < min(n, SHARD_LEVEL):
        level = [child for G in level for child in children(G, graph_filter)]
    logger.debug(f"{len(level)} roots at level {min(n, SHARD_LEVEL)} for n={n}")

    parts = run_sharded(partial(_shard, n, graph_filter), level, shards)
    merged = sorted((pair for part in parts for pair in part), key=lambda pair: pair[0])
    logger.info(f"Enumerated {len(merged)} graphs on {n} vertices")
    return [G for _, G in merged]
