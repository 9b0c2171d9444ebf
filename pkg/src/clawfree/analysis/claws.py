"""
Claws (independent flats), pseudoclaws and generic claws.

Every subset of a claw is a claw, so the search only ever extends claws:
from a claw S it adds an element e larger than max(S) with e outside cl(S)
and keeps S + e when it is again a flat. Each claw is visited once, in
lexicographic order of its sorted elements.
"""

import logging
from functools import partial
from typing import Iterable, Iterator, List, Optional

from ..constructions.size_functions import f_value
from ..core.bitset import GroundSubset, SubsetLike, as_bits, iter_bits, popcount
from ..core.config import WITNESS_LIMIT
from ..core.errors import InputError
from ..core.parallel import run_sharded
from ..matroids.base import Matroid
from ..matroids.operations import contract, simplify
from ..reporting.schemas import ClawReport
from .lines import lines_of

logger = logging.getLogger(__name__)


def is_claw(M: Matroid, S: SubsetLike) -> bool:
    """Whether S is independent and closed"""
    bits = as_bits(M.n, S)
    return M.is_independent(bits) and M.is_flat(bits)


def _extend(M: Matroid, claw: int, start: int, depth: int) -> Iterator[int]:
    """Claws that extend `claw` by elements >= start, up to `depth` more elements"""
    if depth == 0:
        return
    closed = M.closure_of(claw)
    for e in range(start, M.n):
        if closed >> e & 1:
            continue
        grown = claw | 1 << e
        if M.is_flat(grown):
            yield grown
            yield from _extend(M, grown, e + 1, depth - 1)


def iter_claws(M: Matroid, max_size: Optional[int] = None) -> Iterator[int]:
    """Every claw of M as a mask, including the empty claw, lexicographically"""
    if M.loops():
        return
    yield 0
    yield from _extend(M, 0, 0, M.n if max_size is None else max_size)


def _claws_from(M: Matroid, firsts: Iterable[int]) -> Iterator[int]:
    for e in firsts:
        single = 1 << e
        if M.is_flat(single):
            yield single
            yield from _extend(M, single, e + 1, M.n)


def find_claw(M: Matroid, k: int) -> Optional[GroundSubset]:
    """Some k-claw of M, or None; stops at the first one found"""
    if k < 0:
        raise InputError("claw size cannot be negative")
    for claw in iter_claws(M, k):
        if popcount(claw) == k:
            return GroundSubset(M.n, claw)
    return None


def is_claw_free(M: Matroid, t: int) -> bool:
    """Whether M has no (t + 1)-claw"""
    return find_claw(M, t + 1) is None


def claws_of_size(M: Matroid, k: int) -> List[GroundSubset]:
    """All k-claws of M in lexicographic order"""
    return [GroundSubset(M.n, c) for c in iter_claws(M, k) if popcount(c) == k]


def _report(claws: Iterable[int]) -> ClawReport:
    counts = {}
    best = -1
    witnesses: List[int] = []
    truncated = False
    for claw in claws:
        size = popcount(claw)
        counts[size] = counts.get(size, 0) + 1
        if size > best:
            best, witnesses, truncated = size, [], False
        if size == best:
            if len(witnesses) < WITNESS_LIMIT:
                witnesses.append(claw)
            else:
                truncated = True
    return ClawReport(
        max_claw_size=best if best >= 0 else None,
        witnesses=[list(iter_bits(w)) for w in witnesses],
        truncated=truncated,
        counts_by_size=counts,
    )


def _shard_report(M: Matroid, firsts: List[int]) -> ClawReport:
    return _report(_claws_from(M, firsts))


def merge_claw_reports(reports: Iterable[ClawReport]) -> ClawReport:
    """Combine reports over disjoint parts of the claw search"""
    reports = list(reports)
    counts = {}
    for report in reports:
        for size, count in report.counts_by_size.items():
            counts[size] = counts.get(size, 0) + count
    sizes = [r.max_claw_size for r in reports if r.max_claw_size is not None]
    if not sizes:
        return ClawReport(max_claw_size=None, counts_by_size=counts)

    best = max(sizes)
    top = [r for r in reports if r.max_claw_size == best]
    witnesses = sorted(w for r in top for w in r.witnesses)
    truncated = any(r.truncated for r in top) or len(witnesses) > WITNESS_LIMIT
    return ClawReport(
        max_claw_size=best,
        witnesses=witnesses[:WITNESS_LIMIT],
        truncated=truncated,
        counts_by_size=counts,
    )


def max_claw(M: Matroid, shards: int = 1) -> ClawReport:
    """Largest claws of M with exact counts by size.

    The search is split by the smallest element of each claw. A matroid with
    a loop has no claw at all and reports ``max_claw_size=None``.
    """
    if M.loops():
        return ClawReport(max_claw_size=None)

    empty = ClawReport(max_claw_size=0, witnesses=[[]], counts_by_size={0: 1})
    if shards > 1 and M.n > 1:
        parts = run_sharded(partial(_shard_report, M), list(range(M.n)), shards)
    else:
        parts = [_shard_report(M, list(range(M.n)))]
    report = merge_claw_reports([empty] + parts)
    logger.debug(f"Max claw of {M!r}: {report.max_claw_size}")
    return report


def pseudoclaws(M: Matroid, X: SubsetLike, k: int) -> List[GroundSubset]:
    """k-claws of si(M / X) lifted to their representative elements of M"""
    x = as_bits(M.n, X)
    kept = [e for e in range(M.n) if not x >> e & 1]
    simple = simplify(contract(M, x))
    lift = [kept[i] for i in simple.representatives]

    result = []
    for claw in claws_of_size(simple.matroid, k):
        bits = 0
        for i in claw:
            bits |= 1 << lift[i]
        result.append(GroundSubset(M.n, bits))
    return result


def is_generic_claw(M: Matroid, S: SubsetLike, t: int) -> bool:
    """Whether a t-claw S meets no line of four or more points and meets
    exactly f(r - t, t) triangles"""
    bits = as_bits(M.n, S)
    if popcount(bits) != t or not is_claw(M, bits):
        raise InputError(f"{GroundSubset(M.n, bits)} is not a {t}-claw")

    simple = M.is_simple()
    triangles = 0
    for line in lines_of(M):
        if not line & bits:
            continue
        if simple:
            size = popcount(line)
        else:
            size = len({M.closure_of(1 << e) for e in iter_bits(line)})
        if size >= 4:
            return False
        if size == 3:
            triangles += 1
    return triangles == f_value(M.rank - t, t)
