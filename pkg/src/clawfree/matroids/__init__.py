"""Matroid backends, operations and file formats"""

from .base import Matroid
from .bases import BasisMatroid
from .binary import BinaryMatroid
from .io import parse_matroid, parse_matroids, serialize_matroid, serialize_matroids
from .operations import (
    MatroidHandle,
    Simplification,
    are_skew,
    closure,
    connected_components,
    contract,
    delete,
    direct_sum,
    direct_sum_all,
    empty_matroid,
    epsilon,
    is_binary_small,
    minor,
    rank,
    restriction,
    simplify,
    to_basis_matroid,
    validate,
)

__all__ = [
    "Matroid",
    "BasisMatroid",
    "BinaryMatroid",
    "MatroidHandle",
    "Simplification",
    "are_skew",
    "closure",
    "connected_components",
    "contract",
    "delete",
    "direct_sum",
    "direct_sum_all",
    "empty_matroid",
    "epsilon",
    "is_binary_small",
    "minor",
    "parse_matroid",
    "parse_matroids",
    "rank",
    "restriction",
    "serialize_matroid",
    "serialize_matroids",
    "simplify",
    "to_basis_matroid",
    "validate",
]
