"""
Tests for canonical forms and isomorph-free matroid generation
"""

import json
import random
import time
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clawfree.constructions.families import ag, circuit, circuits_coloops, m_rt, pg
from clawfree.core.bitset import iter_bits
from clawfree.core.config import EnumSpec, MatroidClass
from clawfree.core.errors import BudgetExceeded, CapacityError
from clawfree.enumeration.bases import (
    enumerate_basis_matroids,
    enumerate_basis_matroids_up_to,
)
from clawfree.enumeration.binary import BinaryEnumerator, enumerate_binary_matroids
from clawfree.enumeration.canon import canon_binary, canon_matroid, canon_of
from clawfree.enumeration.enumerator import MatroidEnumerator
from clawfree.enumeration.rank3 import enumerate_rank3_matroids, enumerate_rank3_up_to
from clawfree.matroids.bases import BasisMatroid
from clawfree.matroids.binary import BinaryMatroid
from clawfree.matroids.io import parse_matroids
from clawfree.matroids.operations import is_binary_small, to_basis_matroid, validate


def permute_bases(M: BasisMatroid, perm) -> BasisMatroid:
    bases = []
    for b in M.bases:
        bases.append(sum(1 << perm[e] for e in iter_bits(b)))
    return BasisMatroid(M.n, M.rank, bases, validate=False)


def transform_columns(M: BinaryMatroid, rng: random.Random) -> BinaryMatroid:
    """Shuffle the columns and apply random elementary row operations"""
    columns = list(M.columns)
    rng.shuffle(columns)
    for _ in range(3 * M.dimension):
        i, j = rng.sample(range(M.dimension), 2)
        columns = [c ^ (1 << j) if c >> i & 1 else c for c in columns]
    return BinaryMatroid(M.dimension, columns)


class TestCanonicalForms:
    """Test isomorphism-invariant canonical strings"""

    @settings(max_examples=30, deadline=None)
    @given(st.permutations(range(7)))
    def test_bases_canon_invariant(self, perm):
        M = to_basis_matroid(pg(3))
        assert canon_matroid(permute_bases(M, perm)) == canon_matroid(M)

    @settings(max_examples=30, deadline=None)
    @given(st.permutations(range(7)))
    def test_canon_of_mixed_matroid(self, perm):
        M = circuits_coloops([3, 3], 1)
        assert canon_matroid(permute_bases(M, perm)) == canon_matroid(M)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32 - 1))
    def test_binary_canon_invariant(self, seed):
        M = m_rt(5, 2)
        transformed = transform_columns(M, random.Random(seed))
        assert canon_binary(transformed) == canon_binary(M)

    def test_backends_share_canon(self):
        assert canon_matroid(ag(3)) == canon_matroid(circuit(4))
        assert canon_matroid(m_rt(3, 2)) == canon_matroid(circuits_coloops([3], 1))

    def test_distinguishes(self):
        assert canon_matroid(circuit(4)) != canon_matroid(circuits_coloops([3], 1))
        assert canon_binary(ag(3)) != canon_binary(m_rt(3, 2))

    def test_canon_of_dispatch(self):
        assert canon_of(pg(3)) == canon_binary(pg(3))
        assert canon_of(circuit(4)) == canon_matroid(circuit(4))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            canon_matroid(pg(5))


class TestBinaryEnumeration:
    """Test simple binary matroids up to GL(r, 2)"""

    def test_rank_two(self):
        assert sorted(M.n for M in enumerate_binary_matroids(2, 3)) == [2, 3]

    def test_rank_three_sizes(self):
        found = enumerate_binary_matroids(3, 7)
        assert Counter(M.n for M in found) == {3: 1, 4: 2, 5: 1, 6: 1, 7: 1}
        assert all(M.is_simple() and M.rank == 3 for M in found)

    def test_rank_three_triangle_free(self):
        found = enumerate_binary_matroids(3, 7, triangle_free=True)
        assert sorted(M.n for M in found) == [3, 4]

    def test_matches_bases_backend(self):
        binary = {canon_matroid(M) for M in enumerate_binary_matroids(3, 7)}
        simple = enumerate_basis_matroids_up_to(7, 3, simple_only=True)
        assert binary == {canon_matroid(M) for M in simple if is_binary_small(M)}

    @pytest.mark.parametrize("r,size", [(3, 7), (4, 6)])
    def test_column_classes_are_matroid_classes(self, r, size):
        found = enumerate_binary_matroids(r, size)
        assert len({canon_matroid(M) for M in found}) == len(found)

    def test_sorted_by_canon(self):
        found = enumerate_binary_matroids(3, 7)
        codes = [canon_binary(M) for M in found]
        assert codes == sorted(codes)

    def test_sharded_matches(self):
        sharded = [canon_binary(M) for M in enumerate_binary_matroids(3, 7, shards=2)]
        assert sharded == [canon_binary(M) for M in enumerate_binary_matroids(3, 7)]

    def test_rank_four_triangle_free_largest_is_affine(self):
        found = enumerate_binary_matroids(4, 8, triangle_free=True)
        largest = [M for M in found if M.n == 8]
        assert len(largest) == 1
        assert canon_binary(largest[0]) == canon_binary(ag(4))

    def test_deadline(self):
        spec = EnumSpec(MatroidClass.BINARY, rank=3, n_max=7)
        with pytest.raises(BudgetExceeded):
            BinaryEnumerator(spec, deadline=time.monotonic() - 1).run()


class TestRank3Enumeration:
    """Test simple rank-3 matroids as linear spaces"""

    @pytest.mark.parametrize("n,count", [(3, 1), (4, 2), (5, 4), (6, 9), (7, 23)])
    def test_counts(self, n, count):
        assert len(enumerate_rank3_matroids(n)) == count

    @pytest.mark.slow
    @pytest.mark.parametrize("n,count", [(8, 68), (9, 383)])
    def test_larger_counts(self, n, count):
        assert len(enumerate_rank3_matroids(n)) == count

    def test_matches_bases_backend(self):
        ours = [canon_matroid(M) for M in enumerate_rank3_up_to(6)]
        simple = enumerate_basis_matroids_up_to(6, 3, simple_only=True)
        theirs = [canon_matroid(M) for M in simple]
        assert ours == theirs

    def test_triangle_free(self):
        # only the uniform matroids U_{3,n} have no long line
        found = enumerate_rank3_up_to(6, triangle_free=True)
        assert sorted(M.n for M in found) == [3, 4, 5, 6]
        assert canon_matroid(circuit(4)) in {canon_matroid(M) for M in found}

    def test_output_is_simple_rank_three(self):
        for M in enumerate_rank3_matroids(6):
            assert M.rank == 3
            assert M.is_simple()


class TestBasesEnumeration:
    """Test matroids given by basis families"""

    def test_loopless_rank_two(self):
        # partitions of four elements into at least two parallel classes
        assert len(enumerate_basis_matroids(4, 2)) == 4

    def test_simple_rank_two(self):
        found = enumerate_basis_matroids(4, 2, simple_only=True)
        assert len(found) == 1
        assert len(found[0].bases) == 6

    def test_with_loops(self):
        assert len(enumerate_basis_matroids(2, 1, loopless_only=False)) == 2

    def test_outputs_satisfy_exchange(self):
        for M in enumerate_basis_matroids_up_to(5, 2):
            assert validate(M).valid


class TestMatroidEnumerator:
    """Test the class dispatcher and spooling"""

    def test_matroids_of_size(self):
        enumerator = MatroidEnumerator(EnumSpec(MatroidClass.BINARY, rank=3, n_max=7))
        assert len(enumerator.matroids(4)) == 2

    def test_spool(self, tmp_path):
        enumerator = MatroidEnumerator(EnumSpec(MatroidClass.BINARY, rank=3, n_max=7))
        manifest = enumerator.spool(tmp_path)
        assert manifest.count == 6
        assert manifest.records_file == "binary-r3-n7.txt"
        records = parse_matroids((tmp_path / manifest.records_file).read_text())
        assert len(records) == 6
        data = json.loads((tmp_path / "binary-r3-n7.manifest.json").read_text())
        assert data["count"] == 6
        assert data["params"]["rank"] == 3

    def test_rank3_dispatch(self):
        enumerator = MatroidEnumerator(EnumSpec(MatroidClass.RANK3, rank=3, n_max=5))
        assert len(enumerator.run()) == 1 + 2 + 4


if __name__ == "__main__":
    pytest.main([__file__])
