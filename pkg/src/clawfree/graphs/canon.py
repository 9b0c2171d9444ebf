"""
Canonical forms of simple graphs
"""

import logging
from typing import Dict, Sequence, Tuple

from ..core.bitset import bits_of, popcount
from ..core.config import GRAPH_CANON_MAX_VERTICES
from ..core.errors import CapacityError
from ..core.labeling import (
    Cells,
    Labeling,
    LabelingProblem,
    canonical_labeling,
    split_cells,
)
from .graph import SimpleGraph, serialize_graph

logger = logging.getLogger(__name__)


class GraphLabeling(LabelingProblem):
    """Cells split by neighbour counts into every other cell"""

    def __init__(self, G: SimpleGraph):
        super().__init__(G.n)
        self.G = G

    def refine(self, cells: Cells, prefix: Sequence[int]) -> Cells:
        adj = self.G.adj
        while True:
            masks = [bits_of(cell) for cell in cells]

            def key(v: int, index: Dict[int, int]) -> Tuple[int, ...]:
                return tuple(popcount(adj[v] & m) for m in masks)

            refined = split_cells(cells, key)
            if len(refined) == len(cells):
                return refined
            cells = refined

    def leaf_code(self, ordering: Sequence[int]) -> Tuple[int, ...]:
        adj = self.G.adj
        code = []
        for i, v in enumerate(ordering):
            row = 0
            for j in range(i):
                if adj[v] >> ordering[j] & 1:
                    row |= 1 << j
            code.append(row)
        return tuple(code)


def graph_labeling(G: SimpleGraph) -> Labeling:
    if G.n > GRAPH_CANON_MAX_VERTICES:
        raise CapacityError(
            f"graph canonical form supports n <= {GRAPH_CANON_MAX_VERTICES}"
        )
    return canonical_labeling(GraphLabeling(G))


def canonical_graph(G: SimpleGraph) -> SimpleGraph:
    return G.relabel(graph_labeling(G).ordering)


def canon_graph(G: SimpleGraph) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic"""
    return serialize_graph(canonical_graph(G)).encode("ascii")
