import pytest

from rankmax import (FamilySpec, all_levels_good_edges, build_family, bits,
                     cycle_good_edges, flip_bit, joined_good_edges,
                     level_good_edges, mu_cycle, mu_joined, mu_multipartite,
                     mu_path, mu_path_recurrence, multipartite_forbidden_edges,
                     multipartite_good_edges, next_center, non_neighbor_edges,
                     path_good_edges, path_good_targets, standard_path_ranking,
                     vertices_labeled_at_least)
from helpers import path_graph

# Derived by hand from the center-block characterization: a center c
# (position divisible by 4) accepts every partner at distance >= 2 within
# the open interval (c - lowbit(c), c + lowbit(c)).
HP3 = ((1, 4), (2, 4), (4, 6), (4, 7))
HP4 = ((1, 4), (1, 8), (2, 4), (2, 8), (3, 8), (4, 6), (4, 7), (4, 8),
       (5, 8), (6, 8), (8, 10), (8, 11), (8, 12), (8, 13), (8, 14), (8, 15),
       (9, 12), (10, 12), (12, 14), (12, 15))
HC3 = HP3 + ((2, 8), (3, 8), (4, 8), (5, 8), (6, 8))


class TestFlipBit:
    def test_values(self):
        assert flip_bit(0) == 1
        assert flip_bit(1) == 0

    def test_involution(self):
        assert all(flip_bit(flip_bit(b)) == b for b in (0, 1))

    def test_rejects_non_binary(self):
        with pytest.raises(ValueError):
            flip_bit(2)


class TestNextCenter:
    @pytest.mark.parametrize("m,s,expected", [
        (5, 1, 8), (9, 1, 12), (9, 2, 16), (7, 1, 8), (11, 1, 12), (17, 2, 24),
    ])
    def test_hand_values(self, m, s, expected):
        assert next_center(m, s) == expected

    def test_equals_round_up_to_power_multiple(self):
        for m in range(5, 128, 2):
            for s in range(1, m.bit_length() - 1):
                step = 2 ** (s + 1)
                assert next_center(m, s) == -(-m // step) * step

    def test_rejects_even_m(self):
        with pytest.raises(ValueError):
            next_center(6, 1)

    def test_rejects_s_out_of_range(self):
        with pytest.raises(ValueError):
            next_center(9, 3)


class TestPathGoodTargets:
    @pytest.mark.parametrize("m,k,expected", [
        (1, 3, {4}),
        (4, 3, {6, 7}),
        (5, 4, {8}),
        (8, 4, {10, 11, 12, 13, 14, 15}),
        (10, 4, {12}),
        (7, 4, set()),
    ])
    def test_corrected_targets(self, m, k, expected):
        assert path_good_targets(m, k) == expected

    def test_printed_clauses_miss_left_block_edges(self):
        # v_10 sits inside the block of center 12 but no printed clause
        # produces the pair from the smaller endpoint.
        assert path_good_targets(10, 4, "printed") == set()
        assert path_good_targets(10, 4, "corrected") == {12}

    def test_literal_clause_two_needs_positive_run_index(self):
        assert path_good_targets(4, 3, "literal") == set()
        assert path_good_targets(4, 3, "printed") == {6, 7}

    def test_out_of_range_m(self):
        with pytest.raises(ValueError):
            path_good_targets(8, 3)

    def test_union_of_targets_matches_edge_set(self):
        for k in (3, 4, 5):
            from_targets = {(m, n)
                            for m in range(1, 2 ** k)
                            for n in path_good_targets(m, k)}
            assert from_targets == path_good_edges(k).edge_set()


class TestPathGoodEdges:
    def test_k3_exact(self):
        assert path_good_edges(3).edges == HP3

    def test_k4_exact(self):
        assert path_good_edges(4).edges == HP4

    @pytest.mark.parametrize("k", range(3, 11))
    def test_count_matches_closed_form(self, k):
        assert len(path_good_edges(k)) == mu_path(k)

    def test_variant_counts_at_k4(self):
        assert len(path_good_edges(4, "corrected")) == 20
        assert len(path_good_edges(4, "printed")) == 19
        assert len(path_good_edges(4, "literal")) == 11

    def test_no_host_edges_included(self):
        for k in (3, 4, 5):
            host = set(build_family(FamilySpec.path(k)).edges)
            assert not host & path_good_edges(k).edge_set()

    def test_rejects_small_k(self):
        with pytest.raises(ValueError):
            path_good_edges(2)


class TestLabelSets:
    def test_top_of_fifteen(self):
        r = standard_path_ranking(4)
        assert list(bits(vertices_labeled_at_least(r, 4))) == [8]

    def test_level_one_is_everything(self):
        r = standard_path_ranking(4)
        assert list(bits(vertices_labeled_at_least(r, 1))) == list(range(1, 16))

    def test_level_three(self):
        r = standard_path_ranking(4)
        assert list(bits(vertices_labeled_at_least(r, 3))) == [4, 8, 12]


class TestNonNeighborEdges:
    def test_center_of_fifteen(self):
        g = path_graph(15)
        es = non_neighbor_edges(g, g.members, 8)
        assert len(es) == 15 - 3

    def test_center_of_seven(self):
        g = path_graph(7)
        assert len(non_neighbor_edges(g, g.members, 4)) == 4

    def test_tiny_path_has_none(self):
        g = path_graph(3)
        assert len(non_neighbor_edges(g, g.members, 2)) == 0

    def test_vertex_outside_component(self):
        g = path_graph(7)
        with pytest.raises(ValueError):
            non_neighbor_edges(g, g.induced_subgraph({1, 2, 3}).members, 5)


class TestLevelGoodEdges:
    def test_top_level_of_fifteen(self):
        es = level_good_edges(4, 5)
        assert len(es) == 12
        assert all(8 in e for e in es)

    def test_level_four_of_fifteen(self):
        es = level_good_edges(4, 4)
        assert len(es) == 8
        assert sum(1 for e in es if 4 in e) == 4
        assert sum(1 for e in es if 12 in e) == 4

    def test_level_four_of_thirty_one(self):
        assert len(level_good_edges(5, 4)) == 16

    # the level construction walks the actual graph, so it is bounded by
    # the 63-vertex order cap (k <= 6)
    @pytest.mark.parametrize("k", range(3, 7))
    def test_sizes_and_disjointness(self, k):
        seen = set()
        total = 0
        for j in range(4, k + 2):
            es = level_good_edges(k, j)
            assert len(es) == 2 ** (k - j + 1) * (2 ** (j - 1) - 4)
            assert not seen & es.edge_set()
            seen |= es.edge_set()
            total += len(es)
        assert total == mu_path(k)

    @pytest.mark.parametrize("k", range(3, 7))
    def test_union_equals_block_construction(self, k):
        assert all_levels_good_edges(k).edges == path_good_edges(k).edges

    def test_published_union_bound_undercounts(self):
        assert len(all_levels_good_edges(4, top=4)) == 8

    @pytest.mark.parametrize("k", range(4, 7))
    def test_removing_a_level_leaves_uniform_path_components(self, k):
        g = build_family(FamilySpec.path(k))
        r = standard_path_ranking(k)
        for j in range(4, k + 1):
            rest = g.members & ~vertices_labeled_at_least(r, j)
            comps = g.connected_components(rest)
            assert len(comps) == 2 ** (k - j + 1)
            for comp in comps:
                vs = list(bits(comp))
                assert len(vs) == 2 ** (j - 1) - 1
                assert vs == list(range(vs[0], vs[0] + len(vs)))  # contiguous run
                view = g.induced_subgraph(comp)
                assert view.edge_count == len(vs) - 1

    def test_rejects_j_out_of_range(self):
        with pytest.raises(ValueError):
            level_good_edges(4, 3)
        with pytest.raises(ValueError):
            level_good_edges(4, 6)


class TestCounts:
    def test_headline_values(self):
        assert mu_path(4) == 20
        assert mu_cycle(4) == 33
        assert mu_joined(5) == 8
        assert mu_multipartite(4, 3, 2) == 4

    def test_recurrence_values(self):
        assert mu_path_recurrence(3) == 4
        assert mu_path_recurrence(4) == 2 * 4 + 12 == 20
        assert mu_path_recurrence(6) == 196

    @pytest.mark.parametrize("k", range(3, 11))
    def test_formula_recurrence_and_level_sum_agree(self, k):
        level_sum = sum(2 ** (k - j + 1) * (2 ** (j - 1) - 4)
                        for j in range(4, k + 2))
        assert mu_path(k) == mu_path_recurrence(k) == level_sum
        assert mu_cycle(k) == mu_path(k) + 2 ** k - 3


class TestCycleGoodEdges:
    def test_k3_exact(self):
        assert cycle_good_edges(3).edge_set() == set(HC3)

    def test_k4_count_and_containment(self):
        es = cycle_good_edges(4)
        assert len(es) == 33
        assert path_good_edges(4).edge_set() <= es.edge_set()
        assert sum(1 for e in es if 16 in e) == 13

    def test_k5_count(self):
        assert len(cycle_good_edges(5)) == 97

    def test_no_host_edges(self):
        host = set(build_family(FamilySpec.cycle(4)).edges)
        assert not host & cycle_good_edges(4).edge_set()


class TestMultipartiteEdges:
    def test_three_two(self):
        spec = FamilySpec.multipartite(3, 2)
        assert multipartite_good_edges(spec).edges == ((4, 5),)
        assert multipartite_forbidden_edges(spec).edges == ((1, 2), (1, 3), (2, 3))

    def test_two_two(self):
        spec = FamilySpec.multipartite(2, 2)
        assert multipartite_good_edges(spec).edges == ((3, 4),)
        assert multipartite_forbidden_edges(spec).edges == ((1, 2),)

    def test_singleton_parts_give_nothing(self):
        assert len(multipartite_good_edges(FamilySpec.multipartite(4, 1, 1))) == 0

    @pytest.mark.parametrize("parts", [(3, 2), (2, 2), (4, 3, 2), (2, 2, 1),
                                       (5, 1), (3, 3, 3)])
    def test_partition_of_non_edges(self, parts):
        spec = FamilySpec.multipartite(*parts)
        g = build_family(spec)
        good = multipartite_good_edges(spec).edge_set()
        forb = multipartite_forbidden_edges(spec).edge_set()
        assert good | forb == set(g.non_edges())
        assert not good & forb
        assert len(good) == mu_multipartite(*parts)


class TestJoinedGoodEdges:
    def test_n5_exact(self):
        assert joined_good_edges(5).edges == (
            (2, 10), (3, 10), (4, 10), (5, 6), (5, 7), (5, 8), (5, 9), (5, 10))

    def test_n2_exact(self):
        assert joined_good_edges(2).edges == ((2, 3), (2, 4))

    def test_n3_exact(self):
        assert joined_good_edges(3).edges == ((2, 6), (3, 4), (3, 5), (3, 6))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_count_and_disjointness_from_host(self, n):
        es = joined_good_edges(n)
        assert len(es) == mu_joined(n) == 2 * (n - 1)
        host = set(build_family(FamilySpec.joined(n)).edges)
        assert not host & es.edge_set()

    def test_shared_edge_tagged_from_both_tops(self):
        es = joined_good_edges(5)
        tag = dict(zip(es.edges, es.tags))[(5, 10)]
        assert tag == "top-w,top-v"


class TestEdgeSetInvariants:
    def test_sorted_unique_enforced(self):
        from rankmax import EdgeSet
        with pytest.raises(ValueError):
            EdgeSet(None, ((2, 3), (1, 2)), ("a", "b"))
        with pytest.raises(ValueError):
            EdgeSet(None, ((1, 2),), ())

    def test_json_shape(self):
        obj = path_good_edges(3).to_json_dict()
        assert obj["family"] == {"kind": "path", "k": 3}
        assert obj["edges"] == [[1, 4], [2, 4], [4, 6], [4, 7]]
        assert len(obj["clauses"]) == 4
