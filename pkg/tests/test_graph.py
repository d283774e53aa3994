from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import naive
from movdom import (
    Graph,
    bits,
    closed_neighborhood,
    complete,
    complete_bipartite,
    cycle,
    enumerate_connected_graphs,
    format_edge_list,
    from_edge_list,
    is_connected,
    make_family,
    mask_of,
    open_neighborhood,
    parse_edge_list,
    path,
    random_connected_graph,
    star,
    vertex_list,
)
from strategies import graphs, graphs_with_subset


class TestConstruction:
    def test_p4_degree_sequence(self):
        g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
        assert [g.degree(v) for v in range(4)] == [1, 2, 2, 1]

    def test_duplicate_edges_collapse(self):
        g = from_edge_list(3, [(0, 1), (1, 0), (1, 2)])
        assert g == path(3)
        assert g.edge_count == 2

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            from_edge_list(2, [(0, 0)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            from_edge_list(3, [(0, 3)])

    def test_zero_vertices_rejected(self):
        with pytest.raises(ValueError, match="at least 1"):
            from_edge_list(0, [])

    def test_direct_constructor_rejects_asymmetry(self):
        with pytest.raises(ValueError, match="asymmetric"):
            Graph(2, (0b10, 0b00))

    @given(graphs())
    def test_invariants_hold_on_every_construction(self, g):
        for v in range(g.n):
            assert not g.adj[v] >> v & 1
            assert g.adj[v] >> g.n == 0
            for u in bits(g.adj[v]):
                assert g.adj[u] >> v & 1


class TestFamilies:
    def test_complete_4(self):
        g = make_family("complete", 4)
        assert g.edge_count == 6
        assert all(g.degree(v) == 3 for v in range(4))

    def test_star_4(self):
        g = make_family("star", 4)
        assert g.neighbors(0) == (1, 2, 3)
        assert g.edge_count == 3

    def test_cycle_below_minimum(self):
        with pytest.raises(ValueError, match="at least 3"):
            make_family("cycle", 2)

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="unknown graph family"):
            make_family("torus", 3)

    def test_wrong_arity(self):
        with pytest.raises(ValueError, match="parameter"):
            make_family("complete_bipartite", 2)

    def test_complete_bipartite_shape(self):
        g = complete_bipartite(2, 3)
        assert g.edge_count == 6
        assert g.neighbors(0) == (2, 3, 4)

    def test_path_single_vertex(self):
        assert path(1).n == 1
        assert path(1).edge_count == 0

    def test_cycle_wraps(self):
        assert cycle(3).has_edge(2, 0)


class TestNeighborhoods:
    def test_path_center(self):
        assert closed_neighborhood(path(3), mask_of(1)) == mask_of(0, 1, 2)

    def test_path_endpoint(self):
        assert closed_neighborhood(path(4), mask_of(0)) == mask_of(0, 1)

    def test_empty_set(self):
        assert closed_neighborhood(path(4), 0) == 0
        assert open_neighborhood(path(4), 0) == 0

    def test_open_excludes_self_unless_adjacent(self):
        g = path(3)
        assert open_neighborhood(g, mask_of(1)) == mask_of(0, 2)
        assert open_neighborhood(g, mask_of(0, 1)) == mask_of(0, 1, 2)

    def test_out_of_range_member_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            closed_neighborhood(path(3), mask_of(3))

    @given(graphs_with_subset())
    def test_monotone(self, gs):
        g, s = gs
        sub = s & (s - 1)  # s minus its lowest member
        assert closed_neighborhood(g, sub) | closed_neighborhood(g, s) == closed_neighborhood(g, s)

    @given(graphs())
    def test_full_set_is_fixed_point(self, g):
        assert closed_neighborhood(g, g.full_mask) == g.full_mask


class TestConnectivity:
    def test_path_connected(self):
        assert is_connected(path(4))

    def test_two_components(self):
        assert not is_connected(from_edge_list(4, [(0, 1), (2, 3)]))

    def test_single_vertex(self):
        assert is_connected(complete(1))

    @given(graphs())
    def test_agrees_with_naive_traversal(self, g):
        view = naive.AdjacencyView(g.n, g.edges())
        assert is_connected(g) == naive.connected(view)


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 4), (4, 38)])
    def test_counts_match_brute_force(self, n, count):
        listed = list(enumerate_connected_graphs(n))
        assert len(listed) == count
        assert naive.count_connected(n) == count
        assert len(set(listed)) == count  # each exactly once

    def test_order_is_ascending_edge_mask(self):
        pairs = list(combinations(range(3), 2))
        seen = []
        for g in enumerate_connected_graphs(3):
            edge_set = set(g.edges())
            seen.append(sum(1 << i for i, p in enumerate(pairs) if p in edge_set))
        assert seen == sorted(seen)

    def test_all_yielded_are_connected(self):
        assert all(is_connected(g) for g in enumerate_connected_graphs(4))

    @pytest.mark.parametrize("n", [0, 7])
    def test_out_of_range(self, n):
        with pytest.raises(ValueError, match="enumeration supports"):
            list(enumerate_connected_graphs(n))


class TestRandomGraphs:
    def test_single_vertex(self):
        assert random_connected_graph(1, 0.5, 3) == complete(1)

    def test_probability_one_is_complete(self):
        assert random_connected_graph(5, 1.0, 11) == complete(5)

    def test_deterministic_per_seed(self):
        a = random_connected_graph(6, 0.4, 42)
        b = random_connected_graph(6, 0.4, 42)
        assert a == b

    def test_zero_probability_falls_back_to_spanning_tree(self):
        g = random_connected_graph(6, 0.0, 5)
        assert is_connected(g)
        assert g.edge_count == 5

    @pytest.mark.parametrize("seed", range(5))
    def test_always_connected(self, seed):
        assert is_connected(random_connected_graph(7, 0.3, seed))

    def test_probability_out_of_range(self):
        with pytest.raises(ValueError, match="probability"):
            random_connected_graph(3, 1.5, 0)


class TestEdgeListFormat:
    def test_round_trip(self):
        for g in [path(4), star(5), complete_bipartite(2, 3), random_connected_graph(8, 0.4, 2)]:
            assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_and_blanks_ignored(self):
        text = "# a comment\n\n4\n   \n0 1\n# another\n1 2\n2 3\n"
        assert parse_edge_list(text) == path(4)

    def test_header_must_be_single_integer(self):
        with pytest.raises(ValueError, match="header"):
            parse_edge_list("4 5\n0 1\n")

    def test_edge_lines_need_two_tokens(self):
        with pytest.raises(ValueError, match="exactly 'u v'"):
            parse_edge_list("3\n0 1 2\n")

    def test_non_integer_token(self):
        with pytest.raises(ValueError, match="non-integer"):
            parse_edge_list("3\n0 x\n")

    def test_non_ascii_rejected(self):
        with pytest.raises(ValueError, match="ASCII"):
            parse_edge_list("3\n0 →\n")

    def test_missing_header(self):
        with pytest.raises(ValueError, match="missing vertex-count header"):
            parse_edge_list("# nothing here\n")

    def test_self_loop_in_file(self):
        with pytest.raises(ValueError, match="self-loop"):
            parse_edge_list("2\n1 1\n")

    def test_format_is_canonical(self):
        assert format_edge_list(path(3)) == "3\n0 1\n1 2\n"


class TestMaskHelpers:
    def test_mask_of_and_back(self):
        assert mask_of(0, 2, 5) == 0b100101
        assert vertex_list(0b100101) == [0, 2, 5]

    def test_negative_vertex_rejected(self):
        with pytest.raises(ValueError, match="nonnegative"):
            mask_of(-1)

    @given(st.integers(0, (1 << 12) - 1))
    def test_bits_round_trip(self, mask):
        assert mask_of(*bits(mask)) == mask
