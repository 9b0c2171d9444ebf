"""
Matroid operations shared by both backends: rank and closure queries,
simplification, minors, direct sums, validation and small structural tests
"""

import logging
from itertools import combinations
from typing import Dict, List, NamedTuple, Tuple, Union

from ..core.bitset import (
    GroundSubset,
    SubsetLike,
    as_bits,
    bits_of,
    iter_bits,
    popcount,
)
from ..core.config import BINARY_SCREEN_MAX_ELEMENTS
from ..core.errors import CapacityError, InputError
from ..reporting.schemas import ValidationReport
from .base import Matroid
from .bases import BasisMatroid, exchange_violation
from .binary import BinaryMatroid, compress_bits, reduced_basis

logger = logging.getLogger(__name__)

MatroidHandle = Union[BinaryMatroid, BasisMatroid]


def empty_matroid() -> BinaryMatroid:
    """The matroid on no elements; identity for direct sums"""
    return BinaryMatroid(0, ())


def rank(M: Matroid, S: SubsetLike) -> int:
    """Rank of S in M"""
    return M.rank_of(as_bits(M.n, S))


def closure(M: Matroid, S: SubsetLike) -> GroundSubset:
    """Closure of S in M"""
    return GroundSubset(M.n, M.closure_of(as_bits(M.n, S)))


def are_skew(M: Matroid, X: SubsetLike, Y: SubsetLike) -> bool:
    """Whether r(X u Y) = r(X) + r(Y)"""
    x, y = as_bits(M.n, X), as_bits(M.n, Y)
    return M.rank_of(x | y) == M.rank_of(x) + M.rank_of(y)


def to_basis_matroid(M: Matroid) -> BasisMatroid:
    """The same matroid in the bases backend"""
    if isinstance(M, BasisMatroid):
        return M
    return BasisMatroid(M.n, M.rank, M.bases, validate=False)


class Simplification(NamedTuple):
    """A simplification and the map from non-loop elements to representatives"""

    matroid: Matroid
    element_map: Dict[int, int]

    @property
    def representatives(self) -> Tuple[int, ...]:
        """Original index of each element of the simplification, in order"""
        return tuple(sorted(set(self.element_map.values())))


def parallel_classes(M: Matroid) -> List[int]:
    """Parallel classes of non-loop elements, ordered by smallest element"""
    loops = M.loops()
    seen = loops
    classes = []
    for e in range(M.n):
        if seen >> e & 1:
            continue
        cls = M.closure_of(1 << e) & ~loops
        classes.append(cls)
        seen |= cls
    return classes


def simplify(M: Matroid) -> Simplification:
    """Delete loops and all but the smallest element of each parallel class"""
    element_map: Dict[int, int] = {}
    keep = 0
    for cls in parallel_classes(M):
        rep = (cls & -cls).bit_length() - 1
        keep |= 1 << rep
        for e in iter_bits(cls):
            element_map[e] = rep
    if keep == M.ground:
        return Simplification(M, element_map)
    return Simplification(minor(M, 0, M.ground & ~keep), element_map)


def epsilon(M: Matroid) -> int:
    """Number of points of M"""
    return len(parallel_classes(M))


def minor(M: Matroid, C: SubsetLike, D: SubsetLike) -> Matroid:
    """M / C \\ D on the remaining elements, relabelled in increasing order"""
    c = as_bits(M.n, C)
    d = as_bits(M.n, D)
    if c & d:
        raise InputError("contraction and deletion sets overlap")
    if not c and not d:
        return M

    keep = M.ground & ~c & ~d
    if isinstance(M, BinaryMatroid):
        return _binary_minor(M, c, keep)
    return _bases_minor(M, c, keep)


def _binary_minor(M: BinaryMatroid, c: int, keep: int) -> BinaryMatroid:
    rows = reduced_basis(M.columns[i] for i in iter_bits(c))
    dropped = bits_of(p for p, _ in rows)
    columns = []
    for e in iter_bits(keep):
        v = M.columns[e]
        for pivot, row in rows:
            if v >> pivot & 1:
                v ^= row
        columns.append(compress_bits(v, dropped, M.dimension))
    return BinaryMatroid(M.dimension - len(rows), columns).recoordinatized()


def _bases_minor(M: Matroid, c: int, keep: int) -> BasisMatroid:
    rank_c = M.rank_of(c)
    target = M.rank_of(c | keep) - rank_c
    dropped = M.ground & ~keep
    bases = set()
    for b in M.bases:
        if popcount(b & c) == rank_c and popcount(b & keep) == target:
            bases.add(compress_bits(b & keep, dropped, M.n))
    return BasisMatroid(popcount(keep), target, bases, validate=False)


def delete(M: Matroid, D: SubsetLike) -> Matroid:
    return minor(M, 0, D)


def contract(M: Matroid, C: SubsetLike) -> Matroid:
    return minor(M, C, 0)


def restriction(M: Matroid, S: SubsetLike) -> Matroid:
    """M restricted to S"""
    return minor(M, 0, M.ground & ~as_bits(M.n, S))


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """Direct sum; elements of M2 follow those of M1"""
    if isinstance(M1, BinaryMatroid) and isinstance(M2, BinaryMatroid):
        shifted = [col << M1.dimension for col in M2.columns]
        return BinaryMatroid(M1.dimension + M2.dimension, list(M1.columns) + shifted)

    b1, b2 = to_basis_matroid(M1), to_basis_matroid(M2)
    n = b1.n + b2.n
    if n > 64:
        raise CapacityError(f"direct sum has {n} elements")
    bases = {x | y << b1.n for x in b1.bases for y in b2.bases}
    return BasisMatroid(n, b1.rank + b2.rank, bases, validate=False)


def direct_sum_all(matroids: List[Matroid]) -> Matroid:
    result: Matroid = empty_matroid()
    for M in matroids:
        result = direct_sum(result, M)
    return result


def validate(M: Matroid, require_simple: bool = False) -> ValidationReport:
    """Check the stored representation against its backend's invariants"""
    violations: List[str] = []
    warnings: List[str] = []

    if isinstance(M, BinaryMatroid):
        for e, column in enumerate(M.columns):
            if column == 0:
                violations.append(f"loop present: column {e} is zero")
        seen: Dict[int, int] = {}
        for e, column in enumerate(M.columns):
            if column and column in seen:
                message = f"parallel columns {seen[column]} and {e}"
                (violations if require_simple else warnings).append(message)
            seen.setdefault(column, e)
        if M.rank != M.dimension:
            violations.append(
                f"columns span rank {M.rank} but dimension is {M.dimension}"
            )
    else:
        sizes = {popcount(b) for b in M.bases}
        if len(sizes) > 1:
            violations.append(f"bases have different sizes {sorted(sizes)}")
        violation = exchange_violation(M.bases)
        if violation is not None:
            b1, b2, x = violation
            violations.append(
                f"exchange violated: removing {x} from {list(iter_bits(b1))} "
                f"admits no element of {list(iter_bits(b2 & ~b1))}"
            )
        if require_simple and not M.is_simple():
            violations.append("matroid is not simple")

    return ValidationReport(
        backend=M.backend.value,
        n=M.n,
        rank=M.rank,
        valid=not violations,
        violations=violations,
        warnings=warnings,
    )


def is_binary_small(M: Matroid) -> bool:
    """Whether M has no U_{2,4} minor (Tutte's binary criterion).

    A U_{2,4} minor exists iff some independent set I of size r - 2 leaves a
    rank-2 contraction M / I with at least four points.
    """
    if M.n > BINARY_SCREEN_MAX_ELEMENTS:
        raise CapacityError(
            "U_(2,4)-minor screen supports at most "
            f"{BINARY_SCREEN_MAX_ELEMENTS} elements"
        )
    if isinstance(M, BinaryMatroid) or M.rank < 2:
        return True

    size = M.rank - 2
    candidates = set()
    for b in M.bases:
        for combo in combinations(list(iter_bits(b)), size):
            candidates.add(bits_of(combo))

    for i in sorted(candidates):
        base = M.rank_of(i)
        closed = M.closure_of(i)
        points = 0
        covered = closed
        for e in iter_bits(M.ground & ~closed):
            if covered >> e & 1:
                continue
            points += 1
            if points >= 4:
                logger.debug(f"U_(2,4) minor found contracting {list(iter_bits(i))}")
                return False
            for f in iter_bits(M.ground & ~covered):
                if M.rank_of(i | 1 << e | 1 << f) == base + 1:
                    covered |= 1 << f
    return True


def connected_components(M: Matroid) -> List[int]:
    """Connected components as masks, ordered by smallest element.

    Elements are joined when they share a fundamental circuit with respect to
    the smallest basis; these circuits determine the components.
    """
    parent = list(range(M.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    basis = min(M.bases)
    loops = M.loops()
    for x in iter_bits(M.ground & ~basis & ~loops):
        for b in iter_bits(basis):
            if (basis & ~(1 << b)) | 1 << x in M.bases:
                parent[find(b)] = find(x)

    groups: Dict[int, int] = {}
    for e in range(M.n):
        root = find(e)
        groups[root] = groups.get(root, 0) | 1 << e
    return sorted(groups.values(), key=lambda mask: (mask & -mask))

