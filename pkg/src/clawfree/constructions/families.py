"""
Named matroids and graphs: projective and affine binary geometries, M_{r,t},
free matroids, circuits, circuits with coloops, sums of affine geometries
and the clique unions G_{n,t}
"""

import logging
from itertools import combinations
from typing import List, Sequence, Union

from ..core.bitset import bits_of, full_mask
from ..core.config import GEOMETRY_MAX_RANK, FamilyKind, FamilySpec
from ..core.errors import CapacityError, InputError
from ..graphs.graph import SimpleGraph, disjoint_union
from ..matroids.base import Matroid
from ..matroids.bases import BasisMatroid
from ..matroids.binary import BinaryMatroid
from ..matroids.operations import direct_sum_all, empty_matroid

logger = logging.getLogger(__name__)


def _check_rank(r: int) -> None:
    if r < 1:
        raise InputError("geometry rank must be at least 1")
    if r > GEOMETRY_MAX_RANK:
        raise CapacityError(f"geometries are limited to rank {GEOMETRY_MAX_RANK}")


def pg(r: int) -> BinaryMatroid:
    """PG(r-1, 2): every nonzero vector of GF(2)^r"""
    _check_rank(r)
    return BinaryMatroid(r, range(1, 2**r))


def ag(r: int) -> BinaryMatroid:
    """AG(r-1, 2): the vectors off the hyperplane x1 = 0"""
    _check_rank(r)
    return BinaryMatroid(r, range(2 ** (r - 1), 2**r))


def geometry(kind: Union[FamilyKind, str], r: int) -> BinaryMatroid:
    kind = FamilyKind(kind)
    if kind == FamilyKind.PG:
        return pg(r)
    if kind == FamilyKind.AG:
        return ag(r)
    raise InputError(f"{kind.value} is not a geometry")


def free(r: int) -> BinaryMatroid:
    """U_{r,r}"""
    if r < 0:
        raise InputError("rank cannot be negative")
    return BinaryMatroid(r, [1 << (r - 1 - i) for i in range(r)])


def m_rt(r: int, t: int) -> BinaryMatroid:
    """Direct sum of t binary projective geometries of near-equal ranks summing to r.

    With r = qt + a and 0 <= a < t there are t - a summands of rank q and a of
    rank q + 1; rank-0 summands are empty.
    """
    if r < 0 or t < 1:
        raise InputError("m_rt needs r >= 0 and t >= 1")
    q, a = divmod(r, t)
    ranks = [q] * (t - a) + [q + 1] * a
    summands = [pg(k) for k in ranks if k > 0]
    if not summands:
        return empty_matroid()
    return direct_sum_all(summands)


def circuit(k: int) -> BasisMatroid:
    """The k-element circuit U_{k-1,k}"""
    if k < 2:
        raise InputError("circuits have at least 2 elements")
    hyperplanes = [bits_of(c) for c in combinations(range(k), k - 1)]
    return BasisMatroid(k, k - 1, hyperplanes, validate=False)


def coloops(c: int) -> BasisMatroid:
    """c coloops, U_{c,c} in the bases backend"""
    return BasisMatroid(c, c, [full_mask(c)], validate=False)


def circuits_coloops(sizes: Sequence[int], coloop_count: int = 0) -> Matroid:
    """Direct sum of circuits of the given sizes followed by coloops"""
    if any(k < 2 for k in sizes):
        raise InputError("circuit sizes must be at least 2")
    if coloop_count < 0:
        raise InputError("coloop count cannot be negative")
    parts: List[Matroid] = [circuit(k) for k in sizes]
    if coloop_count:
        parts.append(coloops(coloop_count))
    if not parts:
        return BasisMatroid(0, 0, [0], validate=False)
    result = direct_sum_all(parts)
    logger.debug(f"circuits {list(sizes)} + {coloop_count} coloops: {result!r}")
    return result


def ag_sum(r: int, t: int) -> BinaryMatroid:
    """Direct sum of t copies of AG(r/t - 1, 2)"""
    if t < 1 or r < t or r % t:
        raise InputError("ag_sum needs t >= 1 dividing r")
    return direct_sum_all([ag(r // t)] * t)


def turan_union_graph(n: int, t: int) -> SimpleGraph:
    """G_{n,t}: t - a cliques of size q and a of size q + 1, n = qt + a"""
    if n < 0 or t < 1:
        raise InputError("turan_union_graph needs n >= 0 and t >= 1")
    q, a = divmod(n, t)
    sizes = [q] * (t - a) + [q + 1] * a
    return disjoint_union(SimpleGraph.complete(k) for k in sizes if k)


def build_family(spec: FamilySpec) -> Union[Matroid, SimpleGraph]:
    """Construct the object a FamilySpec names"""
    builders = {
        FamilyKind.PG: lambda p: pg(p[0]),
        FamilyKind.AG: lambda p: ag(p[0]),
        FamilyKind.MRT: lambda p: m_rt(p[0], p[1]),
        FamilyKind.FREE: lambda p: free(p[0]),
        FamilyKind.CIRCUIT: lambda p: circuit(p[0]),
        FamilyKind.CIRCUITS_COLOOPS: lambda p: circuits_coloops(p, spec.coloops),
        FamilyKind.TURAN_UNION: lambda p: turan_union_graph(p[0], p[1]),
        FamilyKind.AG_SUM: lambda p: ag_sum(p[0], p[1]),
    }
    logger.info(f"Building {spec}")
    return builders[spec.kind](spec.params)
