"""
Base Enumerator Class
Canonical augmentation shared by every matroid class
"""

import logging
import time
from abc import ABC, abstractmethod
from functools import partial
from typing import Dict, Generic, Iterator, List, Optional, Tuple, TypeVar

from ..core.config import EnumSpec
from ..core.errors import BudgetExceeded
from ..core.labeling import Labeling
from ..core.parallel import run_sharded
from ..matroids.base import Matroid
from .canon import canon_matroid

logger = logging.getLogger(__name__)

State = TypeVar("State")

# Depth of the generation tree dealt out to shards
SHARD_DEPTH = 3


class BaseEnumerator(ABC, Generic[State]):
    """Base class for isomorph-free generation by single-element augmentation.

    A state of size m + 1 is kept when removing the last element of its
    canonical ordering leaves a state isomorphic to its parent; siblings are
    deduplicated by canonical key. `accepts` must describe a property closed
    under element deletion so it can prune every level.
    """

    def __init__(self, spec: EnumSpec, deadline: Optional[float] = None):
        self.spec = spec
        self.deadline = deadline

    @abstractmethod
    def root(self) -> State:
        """The state on no elements"""

    @abstractmethod
    def size(self, state: State) -> int:
        """Number of elements of a state"""

    @abstractmethod
    def extensions(self, state: State) -> Iterator[State]:
        """Every one-element extension; the new element is the last one"""

    @abstractmethod
    def labeling(self, state: State) -> Labeling:
        """Canonical labelling of a state"""

    @abstractmethod
    def delete(self, state: State, element: int) -> State:
        """State with one element removed and the rest relabelled in order"""

    @abstractmethod
    def to_matroid(self, state: State) -> Matroid:
        """The matroid a state describes"""

    def accepts(self, state: State) -> bool:
        """Hereditary filter applied to every generated state"""
        return True

    def can_grow(self, state: State) -> bool:
        """Whether some descendant may still be emitted"""
        return self.size(state) < self.spec.effective_bound

    def is_output(self, state: State) -> bool:
        """Whether a state is emitted"""
        return self.to_matroid(state).rank == self.spec.rank

    def key(self, labeling: Labeling) -> Tuple:
        return labeling.code

    def canon(self, M: Matroid) -> bytes:
        """Canonical form used to merge and sort the output"""
        return canon_matroid(M)

    def check_budget(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("enumeration budget exhausted")

    def children(self, state: State) -> List[State]:
        """Canonical children of a state, one per isomorphism class, in key order"""
        self.check_budget()
        parent_key = None
        m = self.size(state)
        found: Dict[Tuple, State] = {}
        for child in self.extensions(state):
            if not self.accepts(child):
                continue
            labeling = self.labeling(child)
            last = labeling.ordering[-1]
            if last != m:
                if parent_key is None:
                    parent_key = self.key(self.labeling(state))
                if self.key(self.labeling(self.delete(child, last))) != parent_key:
                    continue
            found.setdefault(self.key(labeling), child)
        return [found[k] for k in sorted(found)]

    def descend(self, state: State) -> Iterator[State]:
        """Every accepted state below `state`, parents before children"""
        yield state
        if not self.can_grow(state):
            return
        for child in self.children(state):
            yield from self.descend(child)

    def generate(self) -> Iterator[Matroid]:
        """Stream emitted matroids in generation order"""
        for state in self.descend(self.root()):
            if self.is_output(state):
                yield self.to_matroid(state)

    def _level(self, depth: int) -> Tuple[List[State], List[State]]:
        """States above `depth` and the frontier at `depth`"""
        above: List[State] = []
        frontier = [self.root()]
        for _ in range(depth):
            nxt = []
            for state in frontier:
                above.append(state)
                if self.can_grow(state):
                    nxt.extend(self.children(state))
            frontier = nxt
        return above, frontier

    def run(self, shards: int = 1) -> List[Tuple[bytes, Matroid]]:
        """All emitted matroids keyed and sorted by canonical form.

        The final pass deduplicates by isomorphism, so output never
        depends on the generation order or the shard count.
        """
        above, frontier = self._level(SHARD_DEPTH)
        found: Dict[bytes, Matroid] = {}
        for state in above:
            if self.is_output(state):
                M = self.to_matroid(state)
                found.setdefault(self.canon(M), M)

        parts = run_sharded(partial(_run_subtrees, self), frontier, shards)
        for part in parts:
            for canon, M in part:
                found.setdefault(canon, M)
        logger.info(f"{type(self).__name__}: {len(found)} classes for {self.spec}")
        return sorted(found.items(), key=lambda pair: pair[0])


def _run_subtrees(
    enumerator: BaseEnumerator, roots: List
) -> List[Tuple[bytes, Matroid]]:
    result = []
    for root in roots:
        for state in enumerator.descend(root):
            if enumerator.is_output(state):
                M = enumerator.to_matroid(state)
                result.append((enumerator.canon(M), M))
    return result
