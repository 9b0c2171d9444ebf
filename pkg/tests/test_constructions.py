"""
Tests for named constructions and the size functions f and g
"""

import pytest

from clawfree.analysis.claws import is_claw_free, max_claw
from clawfree.analysis.lines import is_triangle_free
from clawfree.constructions.families import (
    ag,
    ag_sum,
    build_family,
    circuit,
    circuits_coloops,
    coloops,
    free,
    geometry,
    m_rt,
    pg,
    turan_union_graph,
)
from clawfree.constructions.size_functions import (
    closed_form_f,
    f_value,
    g_mismatch_witness,
    g_value,
    turan_edges,
)
from clawfree.core.config import FamilySpec
from clawfree.core.errors import CapacityError, InputError
from clawfree.graphs.graph import SimpleGraph
from clawfree.matroids.binary import BinaryMatroid


class TestSizeFunctions:
    """Test f(r, t) and g(n, t)"""

    @pytest.mark.parametrize(
        "r,t,expected",
        [
            (3, 2, 4),
            (4, 2, 6),
            (5, 2, 10),
            (6, 3, 9),
            (4, 3, 5),
            (3, 1, 7),
            (4, 1, 15),
            (0, 2, 0),
            (2, 3, 2),
        ],
    )
    def test_f(self, r, t, expected):
        assert f_value(r, t) == expected

    def test_recurrence_matches_closed_form(self):
        for t in range(1, 6):
            for r in range(0, 25):
                assert f_value(r, t) == closed_form_f(r, t)

    def test_f_at_large_rank(self):
        assert f_value(5000, 1) == 2**5000 - 1
        assert f_value(6001, 2) == closed_form_f(6001, 2)
        assert f_value(4000, 4) == 4 * 2**1000 - 4

    def test_f_equals_size_of_mrt(self):
        for t in range(1, 4):
            for r in range(0, 7):
                assert m_rt(r, t).n == f_value(r, t)

    @pytest.mark.parametrize(
        "n,t,expected",
        [(5, 2, 3), (9, 2, 16), (7, 2, 9), (6, 2, 6), (7, 3, 3), (3, 2, 0), (8, 2, 12)],
    )
    def test_g(self, n, t, expected):
        assert g_value(n, t) == expected

    def test_turan_edges(self):
        assert turan_edges(7, 3) == 5
        assert turan_edges(9, 2) == 16
        assert turan_edges(0, 2) == 0

    def test_g_agrees_with_turan_from_4t(self):
        for t in range(1, 4):
            for n in range(4 * t, 4 * t + 8):
                assert g_value(n, t) == turan_edges(n, t)

    def test_mismatch_witness(self):
        assert g_mismatch_witness(2) == 3
        assert (turan_edges(3, 2), g_value(3, 2)) == (1, 0)
        assert g_mismatch_witness(1) == 2

    def test_negative_arguments(self):
        with pytest.raises(InputError):
            f_value(-1, 2)
        with pytest.raises(InputError):
            g_value(3, 0)


class TestFamilies:
    """Test named matroids and graphs"""

    def test_projective_and_affine(self):
        assert (pg(3).n, pg(3).rank) == (7, 3)
        assert (ag(3).n, ag(3).rank) == (4, 3)
        assert geometry("ag", 4) == ag(4)
        with pytest.raises(InputError):
            geometry("mrt", 3)

    def test_geometry_rank_limits(self):
        with pytest.raises(InputError):
            pg(0)
        with pytest.raises(CapacityError):
            pg(21)

    def test_free(self):
        M = free(4)
        assert M.is_free()
        assert M.n == 4

    def test_mrt_shape(self, m52):
        assert isinstance(m52, BinaryMatroid)
        assert (m52.n, m52.rank) == (10, 5)
        assert max_claw(m52).max_claw_size == 2

    def test_mrt_below_t_is_free(self):
        M = m_rt(2, 3)
        assert M.is_free()
        assert M.n == 2

    def test_mrt_is_claw_free(self):
        for t in range(1, 4):
            for r in range(t, 7):
                assert is_claw_free(m_rt(r, t), t)

    def test_circuits_coloops(self):
        M = circuits_coloops([3, 3], 1)
        assert (M.n, M.rank) == (7, 5)
        assert M.coloops() == 1 << 6
        assert circuits_coloops([], 0).n == 0

    def test_circuit_sizes(self):
        with pytest.raises(InputError):
            circuit(1)
        with pytest.raises(InputError):
            circuits_coloops([3, 1])

    def test_coloops(self):
        assert coloops(3).is_free()

    def test_ag_sum(self):
        M = ag_sum(4, 2)
        assert (M.n, M.rank) == (4, 4)
        assert ag_sum(6, 2).n == 8
        assert is_triangle_free(ag_sum(6, 2))
        with pytest.raises(InputError):
            ag_sum(5, 2)

    def test_turan_union_graph(self):
        G = turan_union_graph(9, 2)
        assert isinstance(G, SimpleGraph)
        assert G.edge_count() == 16
        assert turan_union_graph(0, 3).n == 0

    @pytest.mark.parametrize(
        "text,size",
        [
            ("pg:4", 15),
            ("ag:3", 4),
            ("mrt:5,2", 10),
            ("free:3", 3),
            ("circuit:5", 5),
            ("cc:3,3+1", 7),
            ("agsum:6,2", 8),
        ],
    )
    def test_build_family(self, text, size):
        assert build_family(FamilySpec.parse(text)).n == size

    def test_build_graph_family(self):
        G = build_family(FamilySpec.parse("gnt:9,2"))
        assert isinstance(G, SimpleGraph)
        assert G.n == 9


if __name__ == "__main__":
    pytest.main([__file__])
