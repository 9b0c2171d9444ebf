"""
Sharded execution of pure functions
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def split_round_robin(items: Sequence[T], shards: int) -> List[List[T]]:
    """Deal items into at most `shards` non-empty lists"""
    shards = max(1, min(shards, len(items)))
    buckets: List[List[T]] = [[] for _ in range(shards)]
    for i, item in enumerate(items):
        buckets[i % shards].append(item)
    return [b for b in buckets if b]


def run_sharded(
    func: Callable[[List[T]], R], items: Sequence[T], shards: int = 1
) -> List[R]:
    """Apply `func` to each shard of `items` and return the per-shard results.

    `func` must be a module-level function so it can be pickled into worker
    processes. Results come back in shard order; callers merge them with an
    order-insensitive operation and sort the merged output themselves.
    """
    buckets = split_round_robin(items, shards)
    if len(buckets) <= 1:
        return [func(list(items))] if items else []

    logger.debug(f"Running {len(buckets)} shards over {len(items)} items")
    with ProcessPoolExecutor(max_workers=len(buckets)) as pool:
        return list(pool.map(func, buckets))
