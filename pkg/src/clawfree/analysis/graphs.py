"""
Stable sets, cliques and induced forests of a graph
"""

import logging

from ..core.bitset import popcount
from ..graphs.graph import SimpleGraph
from ..graphs.search import largest_induced_forest, max_clique, max_stable_set
from ..reporting.schemas import GraphAnalysis

logger = logging.getLogger(__name__)


def graph_analysis(G: SimpleGraph) -> GraphAnalysis:
    forest = largest_induced_forest(G)
    analysis = GraphAnalysis(
        n=G.n,
        edges=G.edge_count(),
        component_sizes=sorted((popcount(c) for c in G.components()), reverse=True),
        max_stable_set=max_stable_set(G),
        max_clique=max_clique(G),
        largest_induced_forest=len(forest),
        forest_witness=list(forest),
    )
    logger.debug(f"Analysed {G!r}: largest induced forest {len(forest)}")
    return analysis
