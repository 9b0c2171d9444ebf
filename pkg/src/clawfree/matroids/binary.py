"""
Binary matroids given by GF(2) column vectors packed into ints
"""

import logging
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..core.bitset import bits_of, iter_bits
from ..core.config import Backend
from ..core.errors import InputError
from .base import Matroid

logger = logging.getLogger(__name__)

# Echelon basis: leading bit -> vector
Pivots = Dict[int, int]


def gf2_reduce(vector: int, pivots: Pivots) -> int:
    """Reduce a vector against an echelon basis keyed by leading bit"""
    while vector:
        top = vector.bit_length() - 1
        row = pivots.get(top)
        if row is None:
            return vector
        vector ^= row
    return 0


def gf2_insert(vector: int, pivots: Pivots) -> bool:
    """Add a vector to the echelon basis; False when it was dependent"""
    reduced = gf2_reduce(vector, pivots)
    if not reduced:
        return False
    pivots[reduced.bit_length() - 1] = reduced
    return True


def gf2_rank(vectors: Iterable[int]) -> int:
    """Rank over GF(2) of a collection of bit-packed vectors"""
    pivots: Pivots = {}
    for v in vectors:
        gf2_insert(v, pivots)
    return len(pivots)


def reduced_basis(vectors: Iterable[int]) -> List[Tuple[int, int]]:
    """Fully reduced echelon basis as (pivot bit, vector), pivot = lowest set bit.

    Every pivot bit appears in exactly one basis vector, so a vector of the
    span is the xor of the basis vectors whose pivot bit it has set.
    """
    rows: List[Tuple[int, int]] = []
    for v in vectors:
        for pivot, row in rows:
            if v >> pivot & 1:
                v ^= row
        if not v:
            continue
        pivot = (v & -v).bit_length() - 1
        rows = [(p, r ^ v) if r >> pivot & 1 else (p, r) for p, r in rows]
        rows.append((pivot, v))
    rows.sort()
    return rows


def coordinates(vector: int, basis: Sequence[Tuple[int, int]]) -> int:
    """Coordinates of a span vector in a fully reduced basis"""
    coords = 0
    for i, (pivot, _) in enumerate(basis):
        if vector >> pivot & 1:
            coords |= 1 << i
    return coords


def compress_bits(vector: int, dropped: int, width: int) -> int:
    """Delete the coordinates in `dropped` and pack the rest downwards"""
    out = 0
    j = 0
    for i in range(width):
        if dropped >> i & 1:
            continue
        if vector >> i & 1:
            out |= 1 << j
        j += 1
    return out


class BinaryMatroid(Matroid):
    """Matroid of an ordered list of GF(2)^dimension column vectors.

    Bit i of a column is coordinate ``dimension - i`` (the most significant bit
    is the first coordinate). Loops (zero columns) and repeated columns are
    representable so minors stay in this backend; `validate` reports them.
    """

    backend = Backend.BINARY

    def __init__(self, dimension: int, columns: Iterable[int]):
        columns = tuple(int(c) for c in columns)
        super().__init__(len(columns))
        if dimension < 0:
            raise InputError("dimension cannot be negative")
        for c in columns:
            if c < 0 or c >> dimension:
                raise InputError(
                    f"column {c:#x} does not fit in {dimension} coordinates"
                )
        self.dimension = dimension
        self.columns = columns
        self._rank = gf2_rank(columns)
        self._bases: Optional[FrozenSet[int]] = None

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def bases(self) -> FrozenSet[int]:
        if self._bases is None:
            found = []
            for combo in combinations(range(self.n), self._rank):
                if gf2_rank(self.columns[i] for i in combo) == self._rank:
                    found.append(bits_of(combo))
            self._bases = frozenset(found)
        return self._bases

    def _compute_rank(self, bits: int) -> int:
        return gf2_rank(self.columns[i] for i in iter_bits(bits))

    def closure_of(self, bits: int) -> int:
        pivots: Pivots = {}
        for i in iter_bits(bits):
            gf2_insert(self.columns[i], pivots)
        closed = 0
        for e, column in enumerate(self.columns):
            if not gf2_reduce(column, pivots):
                closed |= 1 << e
        return closed

    def is_simple(self) -> bool:
        return all(self.columns) and len(set(self.columns)) == self.n

    def recoordinatized(self) -> "BinaryMatroid":
        """Same matroid with dimension equal to its rank"""
        if self.dimension == self._rank:
            return self
        basis = reduced_basis(self.columns)
        return BinaryMatroid(len(basis), (coordinates(c, basis) for c in self.columns))

    def column_string(self, e: int) -> str:
        """Column e as a most-significant-first bit string"""
        return format(self.columns[e], f"0{self.dimension}b") if self.dimension else ""

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatroid):
            return NotImplemented
        return self.dimension == other.dimension and self.columns == other.columns

    def __hash__(self) -> int:
        return hash((self.dimension, self.columns))

    def __getstate__(self) -> Dict[str, Any]:
        return {"dimension": self.dimension, "columns": self.columns}

    def __setstate__(self, state: Dict[str, Any]) -> None:
        self.__init__(state["dimension"], state["columns"])
