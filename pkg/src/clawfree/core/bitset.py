"""
Ground-set subsets as machine-word bit masks
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple, Union

from .config import WORD_WIDTH
from .errors import CapacityError, InputError


def popcount(bits: int) -> int:
    """Number of set bits"""
    return bin(bits).count("1")


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order"""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_of(indices: Iterable[int]) -> int:
    """Build a mask from element indices"""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def full_mask(n: int) -> int:
    """Mask of the whole ground set 0..n-1"""
    return (1 << n) - 1


def lowest_bit(bits: int) -> int:
    """Index of the lowest set bit (bits must be nonzero)"""
    return (bits & -bits).bit_length() - 1


def check_capacity(n: int) -> None:
    """Reject ground sets wider than one machine word"""
    if n > WORD_WIDTH:
        raise CapacityError(
            f"ground set of {n} elements exceeds word width {WORD_WIDTH}"
        )


@dataclass(frozen=True, order=True)
class GroundSubset:
    """A subset of the ground set 0..n-1"""

    n: int
    bits: int

    def __post_init__(self) -> None:
        check_capacity(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise InputError(
                f"subset {self.bits:#x} has elements outside 0..{self.n - 1}"
            )

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> "GroundSubset":
        indices = list(indices)
        for i in indices:
            if not 0 <= i < n:
                raise InputError(f"element {i} out of range 0..{n - 1}")
        return cls(n, bits_of(indices))

    @classmethod
    def empty(cls, n: int) -> "GroundSubset":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "GroundSubset":
        return cls(n, full_mask(n))

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __contains__(self, element: int) -> bool:
        return 0 <= element < self.n and bool(self.bits >> element & 1)

    def indices(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def union(self, other: "GroundSubset") -> "GroundSubset":
        return GroundSubset(self.n, self.bits | other.bits)

    def intersection(self, other: "GroundSubset") -> "GroundSubset":
        return GroundSubset(self.n, self.bits & other.bits)

    def difference(self, other: "GroundSubset") -> "GroundSubset":
        return GroundSubset(self.n, self.bits & ~other.bits)

    def complement(self) -> "GroundSubset":
        return GroundSubset(self.n, full_mask(self.n) & ~self.bits)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self) + "}"


SubsetLike = Union[GroundSubset, int, Iterable[int]]


def as_bits(n: int, subset: SubsetLike) -> int:
    """Coerce a GroundSubset, raw mask or index collection to a validated mask"""
    if isinstance(subset, GroundSubset):
        if subset.n != n:
            raise InputError(
                f"subset over {subset.n} elements used on a ground set of {n}"
            )
        return subset.bits
    if isinstance(subset, int):
        if subset < 0 or subset >> n:
            raise InputError(f"subset {subset:#x} has elements outside 0..{n - 1}")
        return subset
    return GroundSubset.of(n, subset).bits


def subsets_to_lists(masks: Iterable[int]) -> List[List[int]]:
    """Render masks as sorted index lists for reports"""
    return [list(iter_bits(m)) for m in masks]
