"""
Canonical labelling by individualization and refinement.

A structure on elements 0..n-1 is described by a `LabelingProblem`: an
isomorphism-invariant ordered partition refinement and a complete leaf code
for a total ordering. The search explores the individualization tree, keeps
the smallest leaf code, and prunes sibling branches with the automorphisms
discovered from equal leaf codes.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Cells = List[List[int]]


class LabelingProblem(ABC):
    """Base class for structures that can be canonically labelled"""

    def __init__(self, n: int):
        self.n = n

    def initial_cells(self) -> Cells:
        """Ordered partition before any individualization"""
        return [list(range(self.n))] if self.n else []

    @abstractmethod
    def refine(self, cells: Cells, prefix: Sequence[int]) -> Cells:
        """Refine an ordered partition; must commute with relabelling"""

    @abstractmethod
    def leaf_code(self, ordering: Sequence[int]) -> Tuple:
        """Complete encoding of the structure relabelled by `ordering`"""


def split_cells(cells: Cells, key: Callable[[int, Dict[int, int]], Hashable]) -> Cells:
    """Split every cell by `key(v, cell_index)`, subcells ordered by key"""
    index = {v: i for i, cell in enumerate(cells) for v in cell}
    result: Cells = []
    for cell in cells:
        if len(cell) == 1:
            result.append(cell)
            continue
        groups: Dict[Any, List[int]] = {}
        for v in cell:
            groups.setdefault(key(v, index), []).append(v)
        for k in sorted(groups):
            result.append(sorted(groups[k]))
    return result


@dataclass
class Labeling:
    """Result of a canonical labelling search"""

    code: Tuple
    ordering: Tuple[int, ...]
    automorphisms: List[Tuple[int, ...]] = field(default_factory=list)
    leaves: int = 0


class _Search:
    def __init__(self, problem: LabelingProblem):
        self.problem = problem
        self.best_code: Optional[Tuple] = None
        self.best_ordering: Tuple[int, ...] = ()
        self.automorphisms: List[Tuple[int, ...]] = []
        self.leaves = 0

    def run(self) -> Labeling:
        self.visit(self.problem.initial_cells(), [])
        return Labeling(
            code=self.best_code if self.best_code is not None else (),
            ordering=self.best_ordering,
            automorphisms=self.automorphisms,
            leaves=self.leaves,
        )

    def visit(self, cells: Cells, prefix: List[int]) -> None:
        cells = self.problem.refine(cells, prefix)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            self.leaf(tuple(cell[0] for cell in cells))
            return

        cell = cells[target]
        explored: List[int] = []
        for v in cell:
            if explored and self.same_orbit(v, explored, prefix):
                continue
            rest = [w for w in cell if w != v]
            self.visit(cells[:target] + [[v], rest] + cells[target + 1 :], prefix + [v])
            explored.append(v)

    def leaf(self, ordering: Tuple[int, ...]) -> None:
        self.leaves += 1
        code = self.problem.leaf_code(ordering)
        if self.best_code is None or code < self.best_code:
            self.best_code = code
            self.best_ordering = ordering
        elif code == self.best_code:
            perm = [0] * self.problem.n
            for old, new in zip(self.best_ordering, ordering):
                perm[old] = new
            self.automorphisms.append(tuple(perm))

    def same_orbit(self, v: int, explored: List[int], prefix: List[int]) -> bool:
        """Whether known automorphisms fixing prefix map an explored vertex to v"""
        generators = [g for g in self.automorphisms if all(g[p] == p for p in prefix)]
        if not generators:
            return False
        parent = list(range(self.problem.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in generators:
            for x, y in enumerate(g):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        root = find(v)
        return any(find(u) == root for u in explored)


def canonical_labeling(problem: LabelingProblem) -> Labeling:
    """Smallest leaf code over the individualization-refinement tree"""
    result = _Search(problem).run()
    logger.debug(
        f"Canonical labelling of {problem.n} elements: {result.leaves} leaves, "
        f"{len(result.automorphisms)} automorphisms"
    )
    return result
