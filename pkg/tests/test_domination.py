from itertools import combinations
from math import comb

import pytest
from hypothesis import given

import naive
from movdom import (
    ascending_k_subsets,
    complete,
    cycle,
    domination_lower_bound,
    enumerate_connected_graphs,
    gamma,
    greedy_dominating_set,
    is_dominating,
    mask_of,
    path,
    random_connected_graph,
    sample_dominating_sets,
    star,
    vertex_list,
)
from strategies import graphs, graphs_with_subset


def _view(g):
    return naive.AdjacencyView(g.n, g.edges())


class TestIsDominating:
    def test_p4_middle_pair(self):
        assert is_dominating(path(4), mask_of(1, 2))

    def test_p4_leaves_uncovered(self):
        assert not is_dominating(path(4), mask_of(0, 1))

    def test_whole_vertex_set(self):
        for g in [path(4), star(5), complete(1)]:
            assert is_dominating(g, g.full_mask)

    def test_empty_set_never_dominates(self):
        assert not is_dominating(complete(1), 0)
        assert not is_dominating(path(4), 0)

    @given(graphs_with_subset())
    def test_superset_closure(self, gs):
        g, s = gs
        if is_dominating(g, s):
            assert is_dominating(g, s | mask_of(s.bit_count() % g.n))

    @given(graphs_with_subset())
    def test_agrees_with_naive(self, gs):
        g, s = gs
        assert is_dominating(g, s) == naive.dominates(_view(g), set(vertex_list(s)))


class TestGamma:
    def test_complete_graphs_need_one(self):
        assert gamma(complete(5)).value == 1

    def test_p4(self):
        result = gamma(path(4))
        assert result.value == 2
        assert vertex_list(result.witness) == [0, 2]

    def test_c4(self):
        assert gamma(cycle(4)).value == 2

    def test_witness_dominates_and_is_minimum(self):
        # minimality re-verified by enumeration, up to order 8
        for g in [path(7), cycle(8), random_connected_graph(8, 0.35, 3)]:
            result = gamma(g)
            assert is_dominating(g, result.witness)
            assert result.witness.bit_count() == result.value
            for combo in combinations(range(g.n), result.value - 1):
                assert not is_dominating(g, mask_of(*combo))

    def test_witness_is_lex_least_bitmask(self):
        for g in [path(5), cycle(5), complete(3)]:
            result = gamma(g)
            better = [
                mask
                for mask in ascending_k_subsets(g.n, result.value)
                if is_dominating(g, mask)
            ]
            assert result.witness == better[0]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_naive_on_all_connected(self, n):
        for g in enumerate_connected_graphs(n):
            value, witness = naive.naive_gamma(_view(g))
            result = gamma(g)
            assert result.value == value
            assert vertex_list(result.witness) == list(witness)

    def test_order_cap(self):
        with pytest.raises(ValueError, match="capped"):
            gamma(path(25))

    @given(graphs())
    def test_greedy_never_beats_exact(self, g):
        assert gamma(g).value <= greedy_dominating_set(g).bit_count()

    @given(graphs())
    def test_lower_bound_is_sound(self, g):
        assert domination_lower_bound(g) <= gamma(g).value


class TestSampler:
    def test_every_sample_dominates(self):
        for s in sample_dominating_sets(path(4), 50, 7):
            assert is_dominating(path(4), s)

    def test_zero_count(self):
        assert sample_dominating_sets(path(4), 0, 1) == []

    def test_deterministic(self):
        g = random_connected_graph(9, 0.3, 1)
        assert sample_dominating_sets(g, 30, 5) == sample_dominating_sets(g, 30, 5)

    def test_longer_run_extends_shorter(self):
        g = cycle(6)
        assert sample_dominating_sets(g, 40, 9)[:15] == sample_dominating_sets(g, 15, 9)

    def test_negative_count_rejected(self):
        with pytest.raises(ValueError, match="nonnegative"):
            sample_dominating_sets(path(3), -1, 0)


class TestAscendingKSubsets:
    @pytest.mark.parametrize("n,k", [(5, 0), (5, 2), (6, 3), (4, 4), (3, 5)])
    def test_counts_and_order(self, n, k):
        masks = list(ascending_k_subsets(n, k))
        assert len(masks) == (comb(n, k) if k <= n else 0)
        assert masks == sorted(masks)
        assert all(m.bit_count() == k for m in masks)
