import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperstate.errors import HypergraphError, ParseError
from hyperstate.hypergraph import (
    Hypergraph,
    VertexPermutation,
    add_edges,
    all_hypergraphs,
    components,
    con,
    delete,
    delete_minus,
    delete_plus,
    disjoint_union,
    format_compact,
    from_json_obj,
    hypergraph_sum,
    is_trivial,
    is_vertex_cover,
    isomorphic,
    min_vertex_cover,
    parse,
    rank,
    relabel,
    to_json_obj,
)

from reference import ref_delete, ref_edges, ref_is_cover, ref_reindex
from strategies import hypergraph_pairs, hypergraphs


def H(text):
    return parse(text)


class TestSum:
    def test_self_sum_is_empty(self, g_a):
        assert hypergraph_sum(g_a, g_a) == Hypergraph.empty(4)

    def test_worked_example_sum(self, g_a, g_b):
        assert hypergraph_sum(H("4:1;2,3;3,4;1,2,3"), H("4:0;2,3")) == g_b

    def test_empty_is_identity(self, g_a):
        assert g_a ^ Hypergraph.empty(4) == g_a

    def test_mismatch(self):
        with pytest.raises(HypergraphError):
            hypergraph_sum(H("2:1"), H("3:1"))

    @given(hypergraph_pairs())
    def test_commutative(self, pair):
        g, h = pair
        assert g ^ h == h ^ g

    @given(hypergraph_pairs(max_n=4), st.data())
    def test_associative(self, pair, data):
        g, h = pair
        k = Hypergraph(g.n, data.draw(st.frozensets(st.integers(0, (1 << g.n) - 1))))
        assert (g ^ h) ^ k == g ^ (h ^ k)

    @given(hypergraph_pairs())
    def test_rank_subadditive(self, pair):
        g, h = pair
        assert rank(g ^ h) <= max(rank(g), rank(h))


class TestAddEdges:
    def test_worked_example(self, g_a, g_b):
        assert add_edges(g_a, [(), (2, 3)]) == g_b

    def test_add_nothing(self, g_a):
        assert add_edges(g_a, []) == g_a

    def test_twice_cancels(self, g_a):
        assert add_edges(add_edges(g_a, [(2, 4)]), [(2, 4)]) == g_a

    def test_out_of_range(self, g_a):
        with pytest.raises(HypergraphError):
            add_edges(g_a, [(5,)])

    @given(hypergraph_pairs())
    def test_involution(self, pair):
        g, h = pair
        edges = [e for e in h.edge_sets()]
        assert add_edges(add_edges(g, edges), edges) == g


class TestDeletion:
    def test_worked_example_plus(self, g_a, g_c):
        assert delete_plus(g_a, 1) == g_c
        assert delete_plus(g_a, 1).labels == (2, 3, 4)

    def test_worked_example_minus(self, g_a, g_d):
        assert delete_minus(g_a, 1) == g_d

    def test_empty(self):
        assert delete_plus(Hypergraph.empty(3), 2) == Hypergraph.empty(2)
        assert delete_minus(Hypergraph.empty(3), 2) == Hypergraph.empty(2)

    def test_only_edge_incident(self):
        assert delete_plus(H("2:1,2"), 2) == Hypergraph.empty(1)

    def test_minus_cancels_repeated(self):
        assert delete_minus(H("2:2;1,2"), 1) == Hypergraph.empty(1)

    def test_out_of_range(self, g_a):
        with pytest.raises(HypergraphError):
            delete_plus(g_a, 0)
        with pytest.raises(HypergraphError):
            delete_minus(g_a, 5)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matches_reference_exhaustive(self, n):
        for g in all_hypergraphs(n):
            for k in g.vertices:
                for mode in (1, -1):
                    vs, es = ref_delete(list(g.vertices), ref_edges(g), k, mode)
                    m, ref = ref_reindex(vs, es)
                    got = delete(g, k, mode)
                    assert got.n == m and ref_edges(got) == ref

    @settings(max_examples=200)
    @given(hypergraphs(min_n=2, max_n=5), st.data())
    def test_distinct_deletions_commute(self, g, data):
        j, k = data.draw(st.lists(st.integers(1, g.n), min_size=2, max_size=2, unique=True))
        a, b = data.draw(st.sampled_from([1, -1])), data.draw(st.sampled_from([1, -1]))
        # deleting j shifts every label above it down by one
        first = delete(delete(g, j, a), k - (k > j), b)
        second = delete(delete(g, k, b), j - (j > k), a)
        assert first == second
        assert first.labels == second.labels


class TestRankAndConnectivity:
    def test_rank(self, g_a):
        assert rank(g_a) == 3
        assert rank(Hypergraph.empty(3)) == 0
        assert rank(H("3:0")) == 0
        assert rank(H("3:1,2;2,3")) == 2

    def test_components(self, g_a):
        assert components(g_a) == [frozenset({1, 2, 3, 4})]
        assert components(H("4:1,2;3,4")) == [frozenset({1, 2}), frozenset({3, 4})]
        assert con(Hypergraph.empty(3)) == 3

    def test_loops_and_phi_do_not_connect(self):
        assert con(H("3:0;1;2;3")) == 3

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_components_match_networkx(self, n):
        for g in all_hypergraphs(n):
            graph = nx.Graph()
            graph.add_nodes_from(g.vertices)
            for e in g.edge_sets():
                graph.add_edges_from(itertools.combinations(e, 2))
            expected = sorted(sorted(c) for c in nx.connected_components(graph))
            assert sorted(sorted(c) for c in components(g)) == expected

    def test_is_trivial(self, g_a):
        assert is_trivial(H("3:0;2"))
        assert not is_trivial(g_a)
        assert is_trivial(Hypergraph.empty(2))

    @given(hypergraphs(max_n=5), st.permutations(range(1, 6)))
    def test_invariants_under_relabel(self, g, perm):
        p = VertexPermutation(tuple(v for v in perm if v <= g.n))
        h = relabel(g, p)
        assert rank(h) == rank(g)
        assert con(h) == con(g)
        assert is_trivial(h) == is_trivial(g)


class TestIsomorphism:
    def test_loop_swap(self):
        assert isomorphic(H("2:1"), H("2:2")) == VertexPermutation((2, 1))

    def test_self(self, g_a):
        assert isomorphic(g_a, g_a) == VertexPermutation.identity(4)

    def test_size_profile_differs(self):
        assert isomorphic(H("2:1"), H("2:1,2")) is None

    def test_vertex_count_differs(self):
        assert isomorphic(H("2:"), H("3:")) is None

    @settings(max_examples=100)
    @given(hypergraphs(max_n=5), st.permutations(range(1, 6)))
    def test_finds_witness_for_relabelled(self, g, perm):
        p = VertexPermutation(tuple(v for v in perm if v <= g.n))
        h = relabel(g, p)
        w = isomorphic(g, h)
        assert w is not None and relabel(g, w) == h

    def test_brute_force_n3(self):
        perms = [VertexPermutation(p) for p in itertools.permutations(range(1, 4))]
        graphs = list(all_hypergraphs(3))
        for g in graphs[::7]:
            for h in graphs[::5]:
                expected = any(relabel(g, p) == h for p in perms)
                assert (isomorphic(g, h) is not None) == expected

    def test_bad_permutation(self):
        with pytest.raises(HypergraphError):
            VertexPermutation((1, 1))


class TestVertexCover:
    def test_worked_example_covers(self, g_a):
        assert is_vertex_cover(g_a, {3})
        assert is_vertex_cover(g_a, {1, 4})
        assert not is_vertex_cover(g_a, set())

    def test_worked_example_covers_fail_forall(self, g_a):
        assert not is_vertex_cover(g_a, {3}, semantics="forall")
        assert not is_vertex_cover(g_a, {1, 4}, semantics="forall")

    def test_min_cover(self, g_a):
        assert min_vertex_cover(g_a) == {3}
        assert min_vertex_cover(H("3:0;1;3")) == set()
        assert min_vertex_cover(H("3:1,2,3")) == {1}
        assert min_vertex_cover(H("3:1,2,3"), semantics="forall") == {1, 2}

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    @pytest.mark.parametrize("semantics", ["exists", "forall"])
    def test_matches_reference_exhaustive(self, n, semantics):
        for g in all_hypergraphs(n):
            edges = ref_edges(g)
            for size in range(n + 1):
                for cover in itertools.combinations(g.vertices, size):
                    assert is_vertex_cover(g, cover, semantics) == ref_is_cover(n, edges, cover, semantics)

    @given(hypergraphs(max_n=5))
    def test_full_set_always_covers(self, g):
        assert is_vertex_cover(g, g.vertices)
        assert is_vertex_cover(g, g.vertices, semantics="forall")

    @given(hypergraphs(max_n=5), st.data())
    def test_forall_means_at_most_one_uncovered_vertex_per_edge(self, g, data):
        cover = set(data.draw(st.sets(st.integers(1, max(g.n, 1)))) if g.n else set()) & set(g.vertices)
        expected = all(len(set(e) - cover) <= 1 for e in g.edge_sets())
        assert is_vertex_cover(g, cover, semantics="forall") == expected

    @given(hypergraphs(max_n=5))
    def test_min_cover_is_minimal(self, g):
        cover = min_vertex_cover(g)
        assert is_vertex_cover(g, cover)
        for size in range(len(cover)):
            for smaller in itertools.combinations(g.vertices, size):
                assert not is_vertex_cover(g, smaller)


class TestFormats:
    def test_compact(self, g_a, g_b):
        assert format_compact(g_a) == "4:1;2,3;3,4;1,2,3"
        assert format_compact(g_b) == "4:0;1;3,4;1,2,3"
        assert format_compact(Hypergraph.empty(2)) == "2:"

    def test_json(self, g_a):
        assert to_json_obj(g_a) == {"n": 4, "edges": [[1], [2, 3], [3, 4], [1, 2, 3]]}
        assert parse('{"n":4,"edges":[[1],[2,3],[3,4],[1,2,3]]}') == g_a
        assert from_json_obj({"n": 2, "edges": [[]]}) == H("2:0")

    def test_unsorted_input_is_canonicalised(self):
        assert str(H("3: 3,2,1 ; 2")) == "3:2;1,2,3"

    @pytest.mark.parametrize("text", ["4", "x:1", "2:1,,2", "2:a", "2:1,1", "-1:", "2:0,1", "{bad", '{"n":2}'])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse(text)

    @pytest.mark.parametrize("text", ["2:3", "2:1;1"])
    def test_validation_errors(self, text):
        with pytest.raises(HypergraphError):
            parse(text)

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_round_trip_exhaustive(self, n):
        for g in all_hypergraphs(n):
            assert parse(format_compact(g)) == g
            assert from_json_obj(to_json_obj(g)) == g


def test_disjoint_union_edges():
    g = disjoint_union(H("2:0;1,2"), H("1:0;1"))
    assert g == H("3:1,2;3")


def test_enumeration_count():
    assert sum(1 for _ in all_hypergraphs(2)) == 16
    assert len({g for g in all_hypergraphs(3)}) == 256
