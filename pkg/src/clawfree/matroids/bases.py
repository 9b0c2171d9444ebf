"""
Matroids given by their explicit family of bases
"""

import logging
from typing import Any, Dict, FrozenSet, Iterable, Optional, Tuple

from ..core.bitset import iter_bits, popcount
from ..core.config import Backend
from ..core.errors import InputError
from .base import Matroid

logger = logging.getLogger(__name__)


def exchange_violation(bases: FrozenSet[int]) -> Optional[Tuple[int, int, int]]:
    """First (B1, B2, x) breaking basis exchange, or None.

    Exchange: for bases B1, B2 and x in B1 - B2 there is y in B2 - B1 with
    B1 - x + y a basis.
    """
    for b1 in sorted(bases):
        for b2 in sorted(bases):
            if b1 == b2:
                continue
            for x in iter_bits(b1 & ~b2):
                stripped = b1 & ~(1 << x)
                if not any(stripped | 1 << y in bases for y in iter_bits(b2 & ~b1)):
                    return b1, b2, x
    return None


class BasisMatroid(Matroid):
    """Matroid on 0..n-1 stored as a set of basis masks"""

    backend = Backend.BASES

    def __init__(self, n: int, r: int, bases: Iterable[int], validate: bool = True):
        super().__init__(n)
        bases = frozenset(int(b) for b in bases)
        if not bases:
            raise InputError("a matroid needs at least one basis")
        for b in bases:
            if b < 0 or b >> n:
                raise InputError(f"basis {b:#x} has elements outside 0..{n - 1}")
            if popcount(b) != r:
                raise InputError(f"basis {b:#x} does not have {r} elements")
        self._r = r
        self._bases = bases

        if validate:
            violation = exchange_violation(bases)
            if violation is not None:
                b1, b2, x = violation
                raise InputError(
                    f"basis exchange fails: removing {x} from {b1:#x} against {b2:#x}"
                )

    @property
    def rank(self) -> int:
        return self._r

    @property
    def bases(self) -> FrozenSet[int]:
        return self._bases

    def _compute_rank(self, bits: int) -> int:
        cap = min(self._r, popcount(bits))
        best = 0
        for b in self._bases:
            size = popcount(b & bits)
            if size > best:
                best = size
                if best == cap:
                    break
        return best

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BasisMatroid):
            return NotImplemented
        return self.n == other.n and self._r == other._r and self._bases == other._bases

    def __hash__(self) -> int:
        return hash((self.n, self._r, self._bases))

    def __getstate__(self) -> Dict[str, Any]:
        return {"n": self.n, "r": self._r, "bases": sorted(self._bases)}

    def __setstate__(self, state: Dict[str, Any]) -> None:
        self.__init__(state["n"], state["r"], state["bases"], validate=False)
