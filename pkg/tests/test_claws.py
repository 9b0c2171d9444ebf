"""
Tests for claws, pseudoclaws, generic claws and line profiles
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clawfree.analysis.claws import (
    claws_of_size,
    find_claw,
    is_claw,
    is_claw_free,
    is_generic_claw,
    iter_claws,
    max_claw,
    merge_claw_reports,
    pseudoclaws,
)
from clawfree.analysis.lines import is_triangle_free, line_profile, lines_of
from clawfree.constructions.families import ag, m_rt, pg
from clawfree.core.errors import InputError
from clawfree.verification.campaigns.contract_property import (
    check_pseudoclaws,
    random_binary_matroid,
)


class TestClaws:
    """Test the claw search"""

    def test_fano_has_only_point_claws(self, fano):
        report = max_claw(fano)
        assert report.max_claw_size == 1
        assert report.counts_by_size == {0: 1, 1: 7}
        assert report.witnesses == [[i] for i in range(7)]

    def test_free_matroid(self, free3):
        report = max_claw(free3)
        assert report.max_claw_size == 3
        assert report.counts_by_size == {0: 1, 1: 3, 2: 3, 3: 1}
        assert report.witnesses == [[0, 1, 2]]

    def test_circuit_claws(self, u34):
        report = max_claw(u34)
        assert report.max_claw_size == 2
        assert report.counts_by_size[2] == 6

    def test_loop_means_no_claw(self, looped):
        report = max_claw(looped)
        assert report.max_claw_size is None
        assert list(iter_claws(looped)) == []

    def test_mrt_is_t_claw_free(self, m52):
        assert max_claw(m52).max_claw_size == 2
        assert is_claw_free(m52, 2)
        assert not is_claw_free(m52, 1)

    def test_sharded_search_matches(self, m52):
        assert max_claw(m52, shards=2) == max_claw(m52, shards=1)

    def test_is_claw(self, fano):
        assert is_claw(fano, [])
        assert is_claw(fano, [3])
        assert not is_claw(fano, [0, 1])

    def test_find_claw(self, u34):
        claw = find_claw(u34, 2)
        assert claw is not None
        assert claw.indices() == (0, 1)
        assert find_claw(u34, 3) is None

    def test_find_claw_negative(self, u34):
        with pytest.raises(InputError):
            find_claw(u34, -1)

    def test_claws_of_size_lexicographic(self, u34):
        pairs = [c.indices() for c in claws_of_size(u34, 2)]
        assert pairs == sorted(pairs)
        assert len(pairs) == 6

    def test_merge_empty(self):
        assert merge_claw_reports([]).max_claw_size is None

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32 - 1))
    def test_claws_are_independent_flats(self, seed):
        M = random_binary_matroid(random.Random(seed))
        if M.n > 8:
            return
        for claw in iter_claws(M):
            assert M.is_independent(claw)
            assert M.is_flat(claw)


class TestGenericClaws:
    """Test generic t-claws of M_{r,t}"""

    def test_two_triangles(self):
        M = m_rt(4, 2)
        for S in claws_of_size(M, 2):
            assert is_generic_claw(M, S, 2)

    def test_m52(self, m52):
        claws = claws_of_size(m52, 2)
        assert claws
        assert all(is_generic_claw(m52, S, 2) for S in claws)

    def test_rejects_non_claw(self, fano):
        with pytest.raises(InputError):
            is_generic_claw(fano, [0, 1], 2)

    def test_four_point_line_is_not_generic(self, u24):
        # a point of U_{2,4} meets a four-point line
        assert not is_generic_claw(u24, [0], 1)


class TestPseudoclaws:
    """Test lifted claws of contractions"""

    def test_contract_nothing(self, fano):
        singles = [S.indices() for S in pseudoclaws(fano, 0, 1)]
        assert singles == [(i,) for i in range(7)]

    def test_fano_contracted_point(self, fano):
        # Fano / 0 simplifies to three points on a line
        lifted = pseudoclaws(fano, [0], 1)
        assert len(lifted) == 3
        for S in lifted:
            assert is_claw(fano, S)

    def test_lifted_pseudoclaws_are_claws(self, m52, fano, u34):
        for M in (m52, fano, u34):
            for X in range(0, 1 << M.n, 7):
                assert list(check_pseudoclaws(M, X)) == []


class TestLines:
    """Test line profiles"""

    def test_fano(self, fano):
        profile = line_profile(fano)
        assert profile.counts == {3: 7}
        assert all(count == 3 for count in profile.triangles_through.values())
        assert not profile.triangle_free
        assert len(lines_of(fano)) == 7

    def test_affine_is_triangle_free(self):
        assert is_triangle_free(ag(3))
        assert is_triangle_free(ag(4))
        assert line_profile(ag(3)).counts == {2: 6}

    def test_u24_has_four_point_line(self, u24):
        assert line_profile(u24).counts == {4: 1}

    def test_profile_of_non_simple(self, looped):
        profile = line_profile(looped)
        assert profile.counts == {2: 1}
        assert profile.triangles_through == {1: 0, 3: 0}

    def test_pg_line_count(self):
        # PG(3,2) has 35 lines
        assert line_profile(pg(4)).counts == {3: 35}


if __name__ == "__main__":
    pytest.main([__file__])
