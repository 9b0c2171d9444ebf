"""
Labels and structural diagnostics for tight examples
"""

import logging
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Tuple

from ..analysis.claws import claws_of_size, find_claw, is_generic_claw
from ..constructions.families import ag_sum, m_rt
from ..constructions.size_functions import f_value
from ..core.bitset import iter_bits, popcount
from ..core.config import CANON_MAX_ELEMENTS
from ..enumeration.canon import canon_binary, canon_matroid
from ..matroids.binary import BinaryMatroid
from ..matroids.base import Matroid
from ..matroids.operations import (
    connected_components,
    contract,
    epsilon,
    parallel_classes,
)

logger = logging.getLogger(__name__)

MRT_LABEL = "M_{r,t}"
CIRCUITS_LABEL = "circuits+coloops"
AG_SUM_LABEL = "AG-sum"
OTHER_LABEL = "other"


class Decomposition(NamedTuple):
    """Circuit sizes (sorted) and coloop count of a circuits-plus-coloops matroid"""

    circuits: Tuple[int, ...]
    coloops: int

    def __str__(self) -> str:
        sizes = ",".join(str(k) for k in self.circuits) or "none"
        return f"circuits [{sizes}] + {self.coloops} coloops"


def classify_components(M: Matroid) -> Optional[Decomposition]:
    """Split M into components and read each as a circuit or a coloop.

    Returns None when some component is a loop or neither shape.
    """
    circuits: List[int] = []
    coloop_count = 0
    for component in connected_components(M):
        size = popcount(component)
        rank = M.rank_of(component)
        if size == 1:
            if rank == 0:
                return None
            coloop_count += 1
            continue
        if rank != size - 1:
            return None
        if not all(
            M.is_independent(component & ~(1 << e)) for e in iter_bits(component)
        ):
            return None
        circuits.append(size)
    return Decomposition(tuple(sorted(circuits)), coloop_count)


def _canon(M: Matroid, binary: bool) -> Optional[bytes]:
    if binary and isinstance(M, BinaryMatroid):
        return canon_binary(M)
    if M.n <= CANON_MAX_ELEMENTS:
        return canon_matroid(M)
    return None


@lru_cache(maxsize=None)
def _mrt_canon(r: int, t: int, binary: bool) -> Optional[bytes]:
    return _canon(m_rt(r, t), binary)


@lru_cache(maxsize=None)
def _ag_sum_canon(r: int, t: int, binary: bool) -> Optional[bytes]:
    return _canon(ag_sum(r, t), binary)


def _ag_sum_match(
    M: Matroid, canon: bytes, binary: bool, preferred: int
) -> Optional[int]:
    r = M.rank
    for d in [preferred] + [d for d in range(1, r + 1) if d != preferred]:
        if d < 1 or d > r or r % d or d * 2 ** (r // d - 1) != M.n:
            continue
        if _ag_sum_canon(r, d, binary) == canon:
            return d
    return None


DEFAULT_ORDER = (MRT_LABEL, CIRCUITS_LABEL, AG_SUM_LABEL)
AFFINE_ORDER = (AG_SUM_LABEL, MRT_LABEL, CIRCUITS_LABEL)


def classify(
    M: Matroid, r: int, t: int, order: Tuple[str, ...] = DEFAULT_ORDER
) -> Tuple[str, Optional[str]]:
    """Exactly one label per matroid: the first of `order` that fits, else other"""
    binary = isinstance(M, BinaryMatroid)
    canon = _canon(M, binary)

    for label in order:
        if label == MRT_LABEL:
            if canon is not None and M.rank == r and f_value(r, t) == M.n:
                if _mrt_canon(r, t, binary) == canon:
                    return MRT_LABEL, f"M_({r},{t})"
        elif label == CIRCUITS_LABEL:
            decomposition = classify_components(M)
            if decomposition is not None:
                return CIRCUITS_LABEL, str(decomposition)
        elif label == AG_SUM_LABEL:
            if canon is not None and M.rank:
                d = _ag_sum_match(M, canon, binary, t)
                if d is not None:
                    return AG_SUM_LABEL, f"{d} x AG({M.rank // d - 1},2)"
    return OTHER_LABEL, None


def contraction_structure(M: Matroid, claw: int, t: int) -> bool:
    """Whether M / S has only parallel pairs and f(r - t, t) points"""
    minor = contract(M, claw)
    if any(popcount(cls) != 2 for cls in parallel_classes(minor)):
        return False
    return epsilon(minor) == f_value(M.rank - t, t)


def tight_diagnostics(M: Matroid, t: int, label: str) -> Dict[str, bool]:
    """Structure every equality example must show once its rank exceeds t"""
    if M.rank < t:
        return {}
    diagnostics = {"has_t_claw": find_claw(M, t) is not None}
    claws = claws_of_size(M, t)
    diagnostics["contraction_structure"] = all(
        contraction_structure(M, S.bits, t) for S in claws
    )
    if label == MRT_LABEL:
        diagnostics["generic_claws"] = all(is_generic_claw(M, S, t) for S in claws)
    failed = [name for name, ok in diagnostics.items() if not ok]
    if failed:
        logger.warning(f"Tight example {M!r} fails {', '.join(failed)}")
    return diagnostics
