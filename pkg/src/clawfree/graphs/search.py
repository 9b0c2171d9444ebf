"""
Induced-forest detection and maximum stable sets
"""

import logging
from typing import List, Optional, Tuple

from ..core.bitset import iter_bits, lowest_bit, popcount
from ..core.errors import InputError
from .graph import SimpleGraph

logger = logging.getLogger(__name__)


class UnionFind:
    """Disjoint sets over vertex indices, copied per search branch"""

    def __init__(self, parent: List[int]):
        self.parent = parent

    @classmethod
    def of_size(cls, size: int) -> "UnionFind":
        return cls(list(range(size)))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def copy(self) -> "UnionFind":
        return UnionFind(list(self.parent))


def find_induced_forest(G: SimpleGraph, k: int) -> Optional[Tuple[int, ...]]:
    """Lexicographically first k-set of vertices inducing a forest, or None.

    Vertices are added in increasing order; a vertex joining two of the
    chosen vertices already in one tree would close a cycle and is skipped,
    so no extended subset ever contains a cycle.
    """
    if not 0 <= k <= G.n:
        raise InputError(f"forest size {k} outside 0..{G.n}")

    def extend(
        chosen: List[int], mask: int, forest: UnionFind, start: int
    ) -> Optional[Tuple[int, ...]]:
        if len(chosen) == k:
            return tuple(chosen)
        for v in range(start, G.n - (k - len(chosen)) + 1):
            roots = [forest.find(u) for u in iter_bits(G.adj[v] & mask)]
            if len(set(roots)) != len(roots):
                continue
            grown = forest.copy()
            for root in roots:
                grown.parent[root] = v
            found = extend(chosen + [v], mask | 1 << v, grown, v + 1)
            if found is not None:
                return found
        return None

    return extend([], 0, UnionFind.of_size(G.n), 0)


def has_induced_forest(G: SimpleGraph, k: int) -> bool:
    return find_induced_forest(G, k) is not None


def max_stable_set(G: SimpleGraph) -> int:
    """Size of a largest set of pairwise non-adjacent vertices"""
    best = 0

    def branch(size: int, candidates: int) -> None:
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        if size + popcount(candidates) <= best:
            return
        v = lowest_bit(candidates)
        rest = candidates & ~(1 << v)
        branch(size + 1, rest & ~G.adj[v])
        if G.adj[v] & rest:
            branch(size, rest)

    branch(0, (1 << G.n) - 1)
    return best


def max_clique(G: SimpleGraph) -> int:
    return max_stable_set(G.complement())


def largest_induced_forest(G: SimpleGraph) -> Tuple[int, ...]:
    """Lexicographically first largest vertex set inducing a forest"""
    best: Tuple[int, ...] = ()
    for k in range(1, G.n + 1):
        found = find_induced_forest(G, k)
        if found is None:
            break
        best = found
    return best
