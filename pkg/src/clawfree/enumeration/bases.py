"""
Small matroids given by basis families, grown one element at a time.

Every matroid on m + 1 elements is its deletion of the last element extended
either by a coloop or by an element with the same rank. The same-rank
extensions are exactly the linear subclasses of hyperplanes: sets of
hyperplanes that contain, with any two hyperplanes H1, H2 meeting in a flat
of rank r - 2, every hyperplane through H1 & H2. The new element lies on
exactly the hyperplanes of the subclass.
"""

import logging
from itertools import combinations
from math import comb
from typing import Dict, Iterator, List, Optional

from ..core.bitset import bits_of, iter_bits
from ..core.config import BASES_MAX_SUBSETS, EnumSpec, MatroidClass
from ..core.errors import CapacityError
from ..core.labeling import Labeling
from ..matroids.bases import BasisMatroid
from ..matroids.operations import delete
from .base_enumerator import BaseEnumerator
from .canon import matroid_labeling

logger = logging.getLogger(__name__)


def hyperplanes(M: BasisMatroid) -> List[int]:
    """Flats of rank r - 1, sorted by mask"""
    if M.rank == 0:
        return []
    found = set()
    for b in M.bases:
        for combo in combinations(list(iter_bits(b)), M.rank - 1):
            found.add(M.closure_of(bits_of(combo)))
    return sorted(found)


def linear_subclasses(M: BasisMatroid) -> Iterator[int]:
    """Every linear subclass as a mask over the indices of `hyperplanes(M)`"""
    planes = hyperplanes(M)
    count = len(planes)
    forced: Dict[int, int] = {}
    for i, j in combinations(range(count), 2):
        meet = planes[i] & planes[j]
        if M.rank_of(meet) == M.rank - 2:
            through = bits_of(k for k in range(count) if planes[k] & meet == meet)
            forced[1 << i | 1 << j] = through

    def close(chosen: int) -> int:
        changed = True
        while changed:
            changed = False
            for pair, through in forced.items():
                if chosen & pair == pair and through & ~chosen:
                    chosen |= through
                    changed = True
        return chosen

    def search(index: int, included: int, excluded: int) -> Iterator[int]:
        while index < count and (included | excluded) >> index & 1:
            index += 1
        if index == count:
            yield included
            return
        grown = close(included | 1 << index)
        if not grown & excluded:
            yield from search(index + 1, grown, excluded)
        yield from search(index + 1, included, excluded | 1 << index)

    yield from search(0, 0, 0)


def extend_by_subclass(
    M: BasisMatroid, planes: List[int], subclass: int
) -> BasisMatroid:
    """Add element n on exactly the hyperplanes in `subclass`"""
    p = 1 << M.n
    bases = set(M.bases)
    if M.rank:
        on = {planes[i] for i in iter_bits(subclass)}
        for b in M.bases:
            for x in iter_bits(b):
                independent = b & ~(1 << x)
                if M.closure_of(independent) not in on:
                    bases.add(independent | p)
    return BasisMatroid(M.n + 1, M.rank, bases, validate=False)


def extend_by_coloop(M: BasisMatroid) -> BasisMatroid:
    bases = [b | 1 << M.n for b in M.bases]
    return BasisMatroid(M.n + 1, M.rank + 1, bases, validate=False)


class BasisEnumerator(BaseEnumerator[BasisMatroid]):
    """All matroids of rank r on up to n_max elements, loopless or simple on request"""

    def __init__(
        self,
        spec: EnumSpec,
        loopless_only: bool = True,
        deadline: Optional[float] = None,
    ):
        super().__init__(spec, deadline)
        self.loopless_only = loopless_only
        for m in range(spec.rank, spec.effective_bound + 1):
            if comb(m, spec.rank) > BASES_MAX_SUBSETS:
                raise CapacityError(
                    f"C({m},{spec.rank}) exceeds {BASES_MAX_SUBSETS} candidate bases"
                )

    def root(self) -> BasisMatroid:
        return BasisMatroid(0, 0, [0], validate=False)

    def size(self, state: BasisMatroid) -> int:
        return state.n

    def extensions(self, state: BasisMatroid) -> Iterator[BasisMatroid]:
        if state.rank < self.spec.rank:
            yield extend_by_coloop(state)
        if state.rank == 0:
            yield BasisMatroid(state.n + 1, 0, [0], validate=False)
            return
        planes = hyperplanes(state)
        for subclass in linear_subclasses(state):
            yield extend_by_subclass(state, planes, subclass)

    def accepts(self, state: BasisMatroid) -> bool:
        if self.spec.rank - state.rank > self.spec.effective_bound - state.n:
            return False
        if self.loopless_only and state.loops():
            return False
        if self.spec.require_simple and not state.is_simple():
            return False
        return True

    def labeling(self, state: BasisMatroid) -> Labeling:
        return matroid_labeling(state)

    def delete(self, state: BasisMatroid, element: int) -> BasisMatroid:
        return delete(state, 1 << element)

    def to_matroid(self, state: BasisMatroid) -> BasisMatroid:
        return state

    def is_output(self, state: BasisMatroid) -> bool:
        return state.rank == self.spec.rank


def enumerate_basis_matroids(
    n: int,
    r: int,
    loopless_only: bool = True,
    simple_only: bool = False,
    shards: int = 1,
) -> List[BasisMatroid]:
    """One rank-r matroid on exactly n elements per isomorphism class"""
    spec = EnumSpec(MatroidClass.BASES, rank=r, n_max=n, require_simple=simple_only)
    enumerator = BasisEnumerator(spec, loopless_only=loopless_only)
    return [M for _, M in enumerator.run(shards) if M.n == n]


def enumerate_basis_matroids_up_to(
    n_max: int,
    r: int,
    loopless_only: bool = True,
    simple_only: bool = False,
    shards: int = 1,
) -> List[BasisMatroid]:
    spec = EnumSpec(
        MatroidClass.BASES, rank=r, n_max=n_max, require_simple=simple_only
    )
    enumerator = BasisEnumerator(spec, loopless_only=loopless_only)
    return [M for _, M in enumerator.run(shards)]
