"""
Simple rank-3 matroids as linear spaces.

A simple matroid of rank at most 3 is determined by its long lines (lines
with three or more points): any two points lie on at most one of them. A new
point joins a set of pairwise disjoint blocks, each block being either a
whole existing long line or a pair of points on no common long line, which
becomes a new triangle with it.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..core.bitset import bits_of, full_mask, iter_bits, lowest_bit, popcount
from ..core.config import EnumSpec, MatroidClass
from ..core.labeling import (
    Cells,
    Labeling,
    LabelingProblem,
    canonical_labeling,
    split_cells,
)
from ..matroids.bases import BasisMatroid
from .base_enumerator import BaseEnumerator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearSpace:
    """Points 0..n-1 and the masks of the long lines"""

    n: int
    lines: Tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        if self.n <= 2:
            return self.n
        if len(self.lines) == 1 and self.lines[0] == full_mask(self.n):
            return 2
        return 3

    def to_matroid(self) -> BasisMatroid:
        r = self.rank
        if r < 3:
            bases = [bits_of(c) for c in combinations(range(self.n), r)]
        else:
            bases = [
                b
                for b in (bits_of(c) for c in combinations(range(self.n), 3))
                if not any(b & line == b for line in self.lines)
            ]
        return BasisMatroid(self.n, r, bases, validate=False)

    def delete(self, point: int) -> "LinearSpace":
        keep = full_mask(self.n) & ~(1 << point)
        lines = []
        for line in self.lines:
            line &= keep
            if popcount(line) >= 3:
                low = line & full_mask(point)
                high = line >> (point + 1)
                lines.append(low | high << point)
        return LinearSpace(self.n - 1, tuple(sorted(lines)))

    def extensions(self) -> Iterator["LinearSpace"]:
        """Every way to add point n"""
        p = self.n
        line_of_pair: Dict[int, int] = {}
        for line in self.lines:
            for a, b in combinations(list(iter_bits(line)), 2):
                line_of_pair[1 << a | 1 << b] = line

        def blocks(
            unprocessed: int, joined: List[int], pairs: List[int]
        ) -> Iterator[Tuple[List[int], List[int]]]:
            if not unprocessed:
                yield joined, pairs
                return
            x = lowest_bit(unprocessed)
            rest = unprocessed & ~(1 << x)
            yield from blocks(rest, joined, pairs)
            for line in self.lines:
                if line >> x & 1 and line & unprocessed == line:
                    yield from blocks(unprocessed & ~line, joined + [line], pairs)
            for y in iter_bits(rest):
                pair = 1 << x | 1 << y
                if pair not in line_of_pair:
                    yield from blocks(rest & ~(1 << y), joined, pairs + [pair])

        for joined, pairs in blocks(full_mask(self.n), [], []):
            lines = [line | 1 << p if line in joined else line for line in self.lines]
            lines.extend(pair | 1 << p for pair in pairs)
            yield LinearSpace(p + 1, tuple(sorted(lines)))


class LinearSpaceLabeling(LabelingProblem):
    """Points split by the cells met by the long lines through them"""

    def __init__(self, space: LinearSpace):
        super().__init__(space.n)
        self.space = space
        self.through = [
            [line for line in space.lines if line >> v & 1] for v in range(space.n)
        ]

    def refine(self, cells: Cells, prefix: Sequence[int]) -> Cells:
        while True:
            index = {v: i for i, cell in enumerate(cells) for v in cell}

            def key(v: int, _: Dict[int, int]) -> Tuple:
                return tuple(
                    sorted(
                        tuple(sorted(index[u] for u in iter_bits(line) if u != v))
                        for line in self.through[v]
                    )
                )

            refined = split_cells(cells, key)
            if len(refined) == len(cells):
                return refined
            cells = refined

    def leaf_code(self, ordering: Sequence[int]) -> Tuple[int, ...]:
        position = [0] * self.n
        for i, v in enumerate(ordering):
            position[v] = i
        return tuple(
            sorted(
                bits_of(position[u] for u in iter_bits(line))
                for line in self.space.lines
            )
        )


class Rank3Enumerator(BaseEnumerator[LinearSpace]):
    """Linear spaces on up to n_max points; emits those of rank 3"""

    def __init__(
        self,
        spec: EnumSpec,
        triangle_free: bool = False,
        deadline: Optional[float] = None,
    ):
        super().__init__(spec, deadline)
        self.triangle_free = triangle_free

    def root(self) -> LinearSpace:
        return LinearSpace(0)

    def size(self, state: LinearSpace) -> int:
        return state.n

    def extensions(self, state: LinearSpace) -> Iterator[LinearSpace]:
        return state.extensions()

    def accepts(self, state: LinearSpace) -> bool:
        return not (self.triangle_free and state.lines)

    def labeling(self, state: LinearSpace) -> Labeling:
        return canonical_labeling(LinearSpaceLabeling(state))

    def key(self, labeling: Labeling) -> Tuple:
        return (len(labeling.ordering),) + labeling.code

    def delete(self, state: LinearSpace, element: int) -> LinearSpace:
        return state.delete(element)

    def to_matroid(self, state: LinearSpace) -> BasisMatroid:
        return state.to_matroid()

    def is_output(self, state: LinearSpace) -> bool:
        return state.rank == 3 and state.n <= self.spec.effective_bound


def enumerate_rank3_matroids(
    n: int, triangle_free: bool = False, shards: int = 1
) -> List[BasisMatroid]:
    """One simple rank-3 matroid on exactly n elements per isomorphism class"""
    spec = EnumSpec(MatroidClass.RANK3, rank=3, n_max=n)
    return [M for _, M in Rank3Enumerator(spec, triangle_free).run(shards) if M.n == n]


def enumerate_rank3_up_to(
    n_max: int, triangle_free: bool = False, shards: int = 1
) -> List[BasisMatroid]:
    """Simple rank-3 matroids on at most n_max elements, sorted by canonical form"""
    spec = EnumSpec(MatroidClass.RANK3, rank=3, n_max=n_max)
    return [M for _, M in Rank3Enumerator(spec, triangle_free).run(shards)]
