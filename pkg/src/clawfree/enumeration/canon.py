"""
Canonical forms of matroids.

`canon_matroid` works on the basis family and so is independent of the
backend: two matroids get the same string exactly when they are isomorphic.
`binary_labeling` is a faster form for binary matroids given by columns; it
is complete for binary matroids because they are uniquely representable.
"""

import logging
from typing import Dict, List, Sequence, Tuple

from ..core.bitset import bits_of, iter_bits, popcount
from ..core.config import CANON_MAX_ELEMENTS
from ..core.errors import CapacityError
from ..core.labeling import (
    Cells,
    Labeling,
    LabelingProblem,
    canonical_labeling,
    split_cells,
)
from ..matroids.base import Matroid
from ..matroids.binary import BinaryMatroid, Pivots, gf2_insert, gf2_reduce

logger = logging.getLogger(__name__)


def _closure_depth(closures: List[int], v: int) -> int:
    for i, closed in enumerate(closures):
        if closed >> v & 1:
            return i
    return len(closures)


class MatroidLabeling(LabelingProblem):
    """Elements split by rank and closure statistics of pairs"""

    def __init__(self, M: Matroid):
        super().__init__(M.n)
        self.M = M
        self.bases = sorted(M.bases)
        n = M.n
        self.pair_rank = [
            [M.rank_of(1 << e | 1 << f) for f in range(n)] for e in range(n)
        ]
        self.pair_closure = [
            [popcount(M.closure_of(1 << e | 1 << f)) for f in range(n)]
            for e in range(n)
        ]
        degree = [sum(1 for b in self.bases if b >> e & 1) for e in range(n)]
        self.invariant = [
            (
                M.rank_of(1 << e),
                popcount(M.closure_of(1 << e)),
                degree[e],
                tuple(
                    sorted(
                        (self.pair_rank[e][f], self.pair_closure[e][f])
                        for f in range(n)
                        if f != e
                    )
                ),
            )
            for e in range(n)
        ]

    def initial_cells(self) -> Cells:
        if not self.n:
            return []
        return split_cells([list(range(self.n))], lambda v, index: self.invariant[v])

    def refine(self, cells: Cells, prefix: Sequence[int]) -> Cells:
        closures = [
            self.M.closure_of(bits_of(prefix[: i + 1])) for i in range(len(prefix))
        ]
        while True:
            index = {v: i for i, cell in enumerate(cells) for v in cell}

            def key(v: int, _: Dict[int, int]) -> Tuple:
                return (
                    _closure_depth(closures, v),
                    tuple(
                        sorted(
                            (index[f], self.pair_rank[v][f], self.pair_closure[v][f])
                            for f in range(self.n)
                            if f != v
                        )
                    ),
                )

            refined = split_cells(cells, key)
            if len(refined) == len(cells):
                return refined
            cells = refined

    def leaf_code(self, ordering: Sequence[int]) -> Tuple[int, ...]:
        position = [0] * self.n
        for i, v in enumerate(ordering):
            position[v] = i
        relabelled = []
        for b in self.bases:
            mask = 0
            for e in iter_bits(b):
                mask |= 1 << position[e]
            relabelled.append(mask)
        return tuple(sorted(relabelled))


def matroid_labeling(M: Matroid) -> Labeling:
    if M.n > CANON_MAX_ELEMENTS:
        raise CapacityError(
            f"matroid canonical form supports n <= {CANON_MAX_ELEMENTS}"
        )
    return canonical_labeling(MatroidLabeling(M))


def encode_matroid_code(n: int, r: int, code: Sequence[int]) -> bytes:
    return f"{n},{r}:{','.join(format(mask, 'x') for mask in code)}".encode("ascii")


def canon_matroid(M: Matroid) -> bytes:
    """Byte string equal for two matroids exactly when they are isomorphic"""
    labeling = matroid_labeling(M)
    return encode_matroid_code(M.n, M.rank, labeling.code)


def binary_coordinates(
    columns: Sequence[int], ordering: Sequence[int]
) -> Tuple[int, ...]:
    """Columns in `ordering` written in the basis chosen greedily along it"""
    pivots: Pivots = {}
    combos: Dict[int, int] = {}
    code = []
    for v in ordering:
        vector, combo = columns[v], 0
        while vector:
            top = vector.bit_length() - 1
            row = pivots.get(top)
            if row is None:
                break
            vector ^= row
            combo ^= combos[top]
        if vector:
            k = len(pivots)
            pivots[vector.bit_length() - 1] = vector
            combos[vector.bit_length() - 1] = combo ^ (1 << k)
            code.append(1 << k)
        else:
            code.append(combo)
    return tuple(code)


class BinaryLabeling(LabelingProblem):
    """Columns split by which cells complete them to a triangle"""

    def __init__(self, M: BinaryMatroid):
        super().__init__(M.n)
        self.M = M
        where = {c: i for i, c in enumerate(M.columns)}
        self.partner = [
            [
                where.get(M.columns[e] ^ M.columns[f], -1) if f != e else -1
                for f in range(M.n)
            ]
            for e in range(M.n)
        ]

    def refine(self, cells: Cells, prefix: Sequence[int]) -> Cells:
        spans: List[int] = []
        pivots: Pivots = {}
        for p in prefix:
            gf2_insert(self.M.columns[p], pivots)
            closed = 0
            for e, column in enumerate(self.M.columns):
                if not gf2_reduce(column, pivots):
                    closed |= 1 << e
            spans.append(closed)

        while True:
            index = {v: i for i, cell in enumerate(cells) for v in cell}
            index[-1] = -1

            def key(v: int, _: Dict[int, int]) -> Tuple:
                return (
                    _closure_depth(spans, v),
                    tuple(
                        sorted(
                            (index[f], index[self.partner[v][f]])
                            for f in range(self.n)
                            if f != v
                        )
                    ),
                )

            refined = split_cells(cells, key)
            if len(refined) == len(cells):
                return refined
            cells = refined

    def leaf_code(self, ordering: Sequence[int]) -> Tuple[int, ...]:
        return binary_coordinates(self.M.columns, ordering)


def binary_labeling(M: BinaryMatroid) -> Labeling:
    """Canonical labelling of a simple binary matroid given by columns"""
    return canonical_labeling(BinaryLabeling(M))


def canon_binary(M: BinaryMatroid) -> bytes:
    code = binary_labeling(M).code
    return f"b{M.n},{M.rank}:{','.join(format(c, 'x') for c in code)}".encode("ascii")


def canon_of(M: Matroid) -> bytes:
    """canon_binary for column-stored matroids, canon_matroid otherwise"""
    if isinstance(M, BinaryMatroid):
        return canon_binary(M)
    return canon_matroid(M)
