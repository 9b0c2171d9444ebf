"""
Simple binary matroids of a fixed rank as column subsets of PG(r-1, 2)
"""

import logging
from itertools import combinations
from typing import Iterator, List, Optional

from ..core.config import EnumSpec, MatroidClass
from ..core.labeling import Labeling
from ..matroids.base import Matroid
from ..matroids.binary import BinaryMatroid
from .base_enumerator import BaseEnumerator
from .canon import binary_labeling, canon_binary

logger = logging.getLogger(__name__)


def has_triangle(columns) -> bool:
    present = set(columns)
    return any(a ^ b in present for a, b in combinations(columns, 2))


class BinaryEnumerator(BaseEnumerator[BinaryMatroid]):
    """Grows column sets inside GF(2)^r one nonzero vector at a time.

    Column sets equivalent under GL(r, 2) and reordering share a canonical
    labelling, so each simple binary matroid of rank at most r is reached
    once per size.

    Deduplicating by `canon_binary` instead of the matroid canonical form
    loses nothing: a binary matroid is uniquely representable over GF(2), so
    two full-rank column sets give isomorphic matroids exactly when a
    GL(r, 2) change of basis and a reordering carry one onto the other.
    """

    def __init__(
        self,
        spec: EnumSpec,
        triangle_free: bool = False,
        deadline: Optional[float] = None,
    ):
        super().__init__(spec, deadline)
        self.triangle_free = triangle_free
        self.vectors = range(1, 2**spec.rank)

    def root(self) -> BinaryMatroid:
        return BinaryMatroid(self.spec.rank, ())

    def size(self, state: BinaryMatroid) -> int:
        return state.n

    def extensions(self, state: BinaryMatroid) -> Iterator[BinaryMatroid]:
        present = set(state.columns)
        for v in self.vectors:
            if v not in present:
                yield BinaryMatroid(state.dimension, state.columns + (v,))

    def accepts(self, state: BinaryMatroid) -> bool:
        if self.spec.rank - state.rank > self.spec.effective_bound - state.n:
            return False
        if self.triangle_free and has_triangle(state.columns):
            return False
        return True

    def labeling(self, state: BinaryMatroid) -> Labeling:
        return binary_labeling(state)

    def delete(self, state: BinaryMatroid, element: int) -> BinaryMatroid:
        columns = state.columns[:element] + state.columns[element + 1 :]
        return BinaryMatroid(state.dimension, columns)

    def to_matroid(self, state: BinaryMatroid) -> Matroid:
        return state.recoordinatized()

    def canon(self, M: BinaryMatroid) -> bytes:
        return canon_binary(M)

    def is_output(self, state: BinaryMatroid) -> bool:
        return state.rank == self.spec.rank


def enumerate_binary_matroids(
    r: int, size_bound: int, triangle_free: bool = False, shards: int = 1
) -> List[BinaryMatroid]:
    """One simple rank-r binary matroid per isomorphism class with at most
    `size_bound` elements, sorted by canonical form"""
    spec = EnumSpec(
        MatroidClass.BINARY, rank=r, n_max=size_bound, size_bound=size_bound
    )
    return [M for _, M in BinaryEnumerator(spec, triangle_free).run(shards)]
