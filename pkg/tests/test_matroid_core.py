"""
Tests for the matroid backends, operations and text formats
"""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clawfree.constructions.families import circuit, pg
from clawfree.core.bitset import bits_of, full_mask, popcount
from clawfree.core.errors import CapacityError, InputError
from clawfree.matroids.bases import BasisMatroid
from clawfree.matroids.binary import BinaryMatroid, gf2_rank
from clawfree.matroids.io import (
    parse_matroid,
    parse_matroids,
    read_matroid_file,
    serialize_matroid,
    serialize_matroids,
    write_matroid_file,
)
from clawfree.matroids.operations import (
    are_skew,
    closure,
    connected_components,
    contract,
    delete,
    direct_sum,
    epsilon,
    is_binary_small,
    minor,
    parallel_classes,
    rank,
    restriction,
    simplify,
    to_basis_matroid,
    validate,
)


@st.composite
def binary_matroids(draw, max_dimension=4, max_size=7):
    dimension = draw(st.integers(min_value=1, max_value=max_dimension))
    columns = draw(
        st.lists(
            st.integers(min_value=0, max_value=2**dimension - 1),
            min_size=1,
            max_size=max_size,
        )
    )
    return BinaryMatroid(dimension, columns)


class TestBinaryBackend:
    """Test GF(2) column matroids"""

    def test_gf2_rank(self):
        assert gf2_rank([0b011, 0b101, 0b110]) == 2
        assert gf2_rank([0b001, 0b010, 0b100]) == 3
        assert gf2_rank([]) == 0

    def test_fano_ranks(self, fano):
        assert fano.rank == 3
        assert len(fano.bases) == 28
        assert fano.is_simple()
        # 001, 010 and 011 are collinear
        assert rank(fano, [0, 1, 2]) == 2
        assert closure(fano, [0, 1]).indices() == (0, 1, 2)

    def test_column_must_fit(self):
        with pytest.raises(InputError):
            BinaryMatroid(2, [0b100])

    def test_loops_and_parallels(self, looped):
        assert looped.loops() == 0b0001
        assert not looped.is_simple()
        assert parallel_classes(looped) == [0b0110, 0b1000]

    def test_recoordinatized(self):
        M = BinaryMatroid(4, [0b0001, 0b0010, 0b0011])
        R = M.recoordinatized()
        assert R.dimension == 2
        assert R.rank == 2
        assert validate(R).valid


class TestBasesBackend:
    """Test matroids stored as basis families"""

    def test_uniform_ranks(self, u24):
        assert u24.rank == 2
        assert rank(u24, [0]) == 1
        assert rank(u24, [0, 1, 2]) == 2
        assert u24.is_simple()

    def test_exchange_violation_rejected(self):
        with pytest.raises(InputError):
            BasisMatroid(4, 2, [0b0011, 0b1100])

    def test_basis_sizes_must_agree(self):
        with pytest.raises(InputError):
            BasisMatroid(3, 2, [0b011, 0b111])

    def test_needs_a_basis(self):
        with pytest.raises(InputError):
            BasisMatroid(3, 1, [])

    def test_circuit(self, u34):
        assert u34.rank == 3
        assert len(u34.bases) == 4
        assert not u34.is_independent(0b1111)


class TestOperations:
    """Test minors, sums, simplification and structural tests"""

    def test_contract_point_of_fano(self, fano):
        M = contract(fano, [0])
        assert M.n == 6
        assert M.rank == 2
        assert all(popcount(cls) == 2 for cls in parallel_classes(M))
        assert epsilon(M) == 3

    def test_delete_point_of_fano(self, fano):
        M = delete(fano, [6])
        assert M.n == 6
        assert M.rank == 3
        assert M.is_simple()

    def test_minor_sets_must_be_disjoint(self, fano):
        with pytest.raises(InputError):
            minor(fano, [0], [0, 1])

    def test_minor_bases_backend(self, u34):
        M = contract(u34, [0])
        assert isinstance(M, BasisMatroid)
        assert (M.n, M.rank) == (3, 2)

    def test_restriction(self, fano):
        M = restriction(fano, [0, 1, 2])
        assert (M.n, M.rank) == (3, 2)

    def test_simplify(self, looped):
        simple = simplify(looped)
        assert simple.matroid.n == 2
        assert simple.matroid.is_simple()
        assert simple.element_map == {1: 1, 2: 1, 3: 3}
        assert simple.representatives == (1, 3)

    def test_direct_sum_mixed_backends(self, fano, u34):
        M = direct_sum(fano, u34)
        assert isinstance(M, BasisMatroid)
        assert (M.n, M.rank) == (11, 6)
        assert are_skew(M, full_mask(7), full_mask(11) & ~full_mask(7))

    def test_direct_sum_binary(self, fano):
        M = direct_sum(fano, fano)
        assert isinstance(M, BinaryMatroid)
        assert (M.n, M.rank, M.dimension) == (14, 6, 6)

    def test_connected_components(self, triangle_plus_coloop):
        assert connected_components(triangle_plus_coloop) == [0b0111, 0b1000]

    def test_fano_is_connected(self, fano):
        assert connected_components(fano) == [full_mask(7)]

    def test_binary_screen(self, u24, u34, fano):
        assert not is_binary_small(u24)
        assert is_binary_small(u34)
        assert is_binary_small(to_basis_matroid(fano))

    def test_binary_screen_capacity(self):
        n = 16
        M = BasisMatroid(n, 1, [1 << i for i in range(n)], validate=False)
        with pytest.raises(CapacityError):
            is_binary_small(M)


class TestValidate:
    """Test representation checks"""

    def test_valid(self, fano):
        report = validate(fano, require_simple=True)
        assert report.valid
        assert report.backend == "binary"
        assert report.violations == []

    def test_loop_and_parallel(self, looped):
        report = validate(looped)
        assert not report.valid
        assert any("loop" in v for v in report.violations)
        assert any("parallel" in w for w in report.warnings)

    def test_parallel_is_violation_when_simple_required(self):
        report = validate(BinaryMatroid(1, [1, 1]), require_simple=True)
        assert any("parallel" in v for v in report.violations)

    def test_exchange_violation_reported(self):
        M = BasisMatroid(4, 2, [0b0011, 0b1100], validate=False)
        report = validate(M)
        assert not report.valid
        assert any("exchange" in v for v in report.violations)


class TestMatroidText:
    """Test the BMATROID and BASES formats"""

    def test_binary_round_trip(self, fano):
        assert parse_matroid(serialize_matroid(fano)) == fano

    def test_bases_round_trip(self, u34):
        assert parse_matroid(serialize_matroid(u34)) == u34

    def test_binary_text(self):
        text = "BMATROID 2 3\n01\n10\n11\n"
        M = parse_matroid(text)
        assert M.columns == (1, 2, 3)
        assert serialize_matroid(M) == text

    def test_several_records(self, fano, u34):
        assert parse_matroids(serialize_matroids([fano, u34])) == [fano, u34]

    def test_column_count_mismatch(self):
        with pytest.raises(InputError):
            parse_matroid("BMATROID 2 2\n01\n")

    def test_bad_column(self):
        with pytest.raises(InputError):
            parse_matroid("BMATROID 2 1\n012\n")

    def test_data_before_header(self):
        with pytest.raises(InputError):
            parse_matroid("01\nBMATROID 2 1\n01\n")

    def test_expected_single_record(self, fano):
        with pytest.raises(InputError):
            parse_matroid(serialize_matroids([fano, fano]))

    def test_bases_element_out_of_range(self):
        with pytest.raises(InputError):
            parse_matroid("BASES 3 1\n0\n3\n")

    def test_file_round_trip(self, tmp_path, fano):
        path = tmp_path / "nested" / "fano.txt"
        write_matroid_file(path, fano)
        assert read_matroid_file(path) == fano


class TestRankAxioms:
    """Property tests on random binary matroids"""

    @settings(max_examples=60, deadline=None)
    @given(binary_matroids())
    def test_submodular(self, M):
        for a in range(1 << M.n):
            for b in (a >> 1, a ^ M.ground, (a * 5) & M.ground):
                union, meet = M.rank_of(a | b), M.rank_of(a & b)
                assert M.rank_of(a) + M.rank_of(b) >= union + meet

    @settings(max_examples=60, deadline=None)
    @given(binary_matroids())
    def test_closure_idempotent_and_rank_preserving(self, M):
        for a in range(1 << M.n):
            closed = M.closure_of(a)
            assert closed & a == a
            assert M.closure_of(closed) == closed
            assert M.rank_of(closed) == M.rank_of(a)

    @settings(max_examples=40, deadline=None)
    @given(binary_matroids(max_size=6))
    def test_backends_agree(self, M):
        B = to_basis_matroid(M)
        for a in range(1 << M.n):
            assert B.rank_of(a) == M.rank_of(a)

    @settings(max_examples=40, deadline=None)
    @given(binary_matroids(max_size=6), st.data())
    def test_contraction_rank(self, M, data):
        c = data.draw(st.integers(min_value=0, max_value=M.ground))
        N = contract(M, c)
        assert N.rank == M.rank - M.rank_of(c)
        assert N.n == M.n - popcount(c)

    def test_uniform_bases_count(self):
        for n in range(2, 6):
            for r in range(1, n + 1):
                bases = [bits_of(c) for c in combinations(range(n), r)]
                M = BasisMatroid(n, r, bases, validate=False)
                assert M.rank_of(M.ground) == r

    def test_circuit_is_minimally_dependent(self):
        M = circuit(5)
        assert not M.is_independent(M.ground)
        assert all(M.is_independent(M.ground & ~(1 << e)) for e in range(5))

    def test_pg_size(self):
        assert pg(4).n == 15


if __name__ == "__main__":
    pytest.main([__file__])
