"""
Lines (rank-2 flats) and triangle statistics
"""

import logging
from typing import Dict, List

from ..core.bitset import iter_bits, popcount
from ..matroids.base import Matroid
from ..matroids.operations import simplify
from ..reporting.schemas import LineProfile

logger = logging.getLogger(__name__)


def lines_of(M: Matroid) -> List[int]:
    """All rank-2 flats of M, sorted by mask"""
    seen = set()
    for e in range(M.n):
        for f in range(e + 1, M.n):
            pair = 1 << e | 1 << f
            if M.rank_of(pair) < 2 or any((line & pair) == pair for line in seen):
                continue
            seen.add(M.closure_of(pair))
    return sorted(seen)


def line_profile(M: Matroid) -> LineProfile:
    """Line sizes and per-element triangle counts.

    Computed on the simplification; elements are reported by their
    representative (smallest element of the parallel class).
    """
    simple = simplify(M)
    S = simple.matroid
    representatives = simple.representatives

    counts: Dict[int, int] = {}
    through = {representatives[i]: 0 for i in range(S.n)}
    for line in lines_of(S):
        size = popcount(line)
        counts[size] = counts.get(size, 0) + 1
        if size == 3:
            for i in iter_bits(line):
                through[representatives[i]] += 1

    return LineProfile(
        counts=counts,
        triangles_through=through,
        triangle_free=all(size < 3 for size in counts),
    )


def is_triangle_free(M: Matroid) -> bool:
    return line_profile(M).triangle_free
