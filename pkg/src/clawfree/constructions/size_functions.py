"""
Extremal size functions.

f(r, t) is the size of M_{r,t}, the smallest simple rank-r matroid with no
(t + 1)-claw; g(n, t) is the fewest edges of an n-vertex graph with no
induced forest on 2t + 1 vertices.
"""

import logging
from functools import lru_cache
from typing import Optional

from ..core.errors import InputError

logger = logging.getLogger(__name__)


def _check(a: int, t: int, name: str) -> None:
    if a < 0:
        raise InputError(f"{name} cannot be negative")
    if t < 1:
        raise InputError("t must be at least 1")


def closed_form_f(r: int, t: int) -> int:
    """(t - a) 2^q + a 2^(q+1) - t where r = qt + a, 0 <= a < t"""
    _check(r, t, "r")
    q, a = divmod(r, t)
    return (t - a) * 2**q + a * 2 ** (q + 1) - t


def _f_recurrence(r: int, t: int) -> int:
    """f(r, t) = r up to r = t, then 2 f(r - t, t) + t"""
    steps, base = divmod(r, t)
    if base == 0 and steps:
        steps, base = steps - 1, t
    value = base
    for _ in range(steps):
        value = 2 * value + t
    return value


def f_value(r: int, t: int) -> int:
    """f(r, t) by its recurrence; the closed form must agree"""
    _check(r, t, "r")
    value = _f_recurrence(r, t)
    closed = closed_form_f(r, t)
    if value != closed:
        raise AssertionError(f"f({r},{t}): recurrence {value} != closed form {closed}")
    return value


@lru_cache(maxsize=None)
def _g_table(t: int, n: int) -> int:
    if n < 2 * t:
        return 0
    if n <= 4 * t:
        return 3 * (n - 2 * t)
    value = 3 * 2 * t
    for m in range(4 * t + 1, n + 1):
        value += -(-m // t) - 1
    return value


def g_value(n: int, t: int) -> int:
    """g(n, t): 0 below 2t, 3(n - 2t) up to 4t, then g(n-1,t) + ceil(n/t) - 1"""
    _check(n, t, "n")
    return _g_table(t, n)


def turan_edges(n: int, t: int) -> int:
    """Edges of G_{n,t}, the disjoint union of t near-equal cliques"""
    _check(n, t, "n")
    q, a = divmod(n, t)
    return (t - a) * (q * (q - 1) // 2) + a * ((q + 1) * q // 2)


def g_mismatch_witness(t: int) -> Optional[int]:
    """Smallest n < 3t with |E(G_{n,t})| != g(n, t), if any"""
    _check(0, t, "n")
    for n in range(3 * t):
        if turan_edges(n, t) != g_value(n, t):
            return n
    return None
