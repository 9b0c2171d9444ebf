"""
Base Matroid Class
Provides the rank-oracle interface shared by both backends
"""

import logging
from abc import ABC, abstractmethod
from typing import Dict, FrozenSet, Iterator

from ..core.bitset import check_capacity, full_mask, iter_bits, popcount
from ..core.config import Backend

logger = logging.getLogger(__name__)


class Matroid(ABC):
    """Base class for matroids on the ground set 0..n-1.

    Subsets are passed around as integer bit masks. Instances are immutable
    once constructed; the rank cache is a private memo.
    """

    backend: Backend

    def __init__(self, n: int):
        check_capacity(n)
        self.n = n
        self._rank_cache: Dict[int, int] = {}

    @property
    @abstractmethod
    def rank(self) -> int:
        """Rank of the whole ground set"""

    @property
    @abstractmethod
    def bases(self) -> FrozenSet[int]:
        """All bases as bit masks"""

    @abstractmethod
    def _compute_rank(self, bits: int) -> int:
        """Rank of a subset, uncached"""

    @property
    def ground(self) -> int:
        return full_mask(self.n)

    def __len__(self) -> int:
        return self.n

    def rank_of(self, bits: int) -> int:
        """Rank of the subset `bits`"""
        cached = self._rank_cache.get(bits)
        if cached is None:
            cached = self._compute_rank(bits)
            self._rank_cache[bits] = cached
        return cached

    def closure_of(self, bits: int) -> int:
        """Closure of the subset `bits`"""
        base = self.rank_of(bits)
        closed = bits
        for e in iter_bits(self.ground & ~bits):
            if self.rank_of(bits | 1 << e) == base:
                closed |= 1 << e
        return closed

    def is_independent(self, bits: int) -> bool:
        return self.rank_of(bits) == popcount(bits)

    def is_flat(self, bits: int) -> bool:
        return self.closure_of(bits) == bits

    def loops(self) -> int:
        """Mask of rank-0 elements"""
        return self.closure_of(0)

    def coloops(self) -> int:
        """Mask of elements lying in every basis"""
        mask = self.ground
        for basis in self.bases:
            mask &= basis
        return mask

    def is_simple(self) -> bool:
        """No loops and no parallel pairs"""
        if self.loops():
            return False
        for e in range(self.n):
            if self.closure_of(1 << e) != 1 << e:
                return False
        return True

    def is_free(self) -> bool:
        return self.rank == self.n

    def iter_elements(self) -> Iterator[int]:
        return iter(range(self.n))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, rank={self.rank})"
