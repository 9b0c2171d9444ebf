"""Isomorph-free generation of small matroids"""

from .bases import (
    BasisEnumerator,
    enumerate_basis_matroids,
    enumerate_basis_matroids_up_to,
)
from .base_enumerator import BaseEnumerator
from .binary import BinaryEnumerator, enumerate_binary_matroids
from .canon import canon_binary, canon_matroid, canon_of
from .enumerator import MatroidEnumerator
from .rank3 import (
    LinearSpace,
    Rank3Enumerator,
    enumerate_rank3_matroids,
    enumerate_rank3_up_to,
)

__all__ = [
    "BaseEnumerator",
    "BasisEnumerator",
    "BinaryEnumerator",
    "LinearSpace",
    "MatroidEnumerator",
    "Rank3Enumerator",
    "canon_binary",
    "canon_matroid",
    "canon_of",
    "enumerate_basis_matroids",
    "enumerate_basis_matroids_up_to",
    "enumerate_binary_matroids",
    "enumerate_rank3_matroids",
    "enumerate_rank3_up_to",
]
