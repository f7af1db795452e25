from __future__ import annotations

import random

import pytest

from oracles import longest_ending_at_bruteforce, random_digraph
from pathdraw import (
    DiGraph,
    GraphError,
    generate_random_dag,
    longest_path_ending_at,
    parse_graph,
    remove_cycles,
    serialize_graph,
    topo_sort,
)


class TestParse:
    def test_smallest_chain(self):
        g = parse_graph("3\n0 1\n1 2")
        assert g.vertex_count == 3
        assert g.edges == ((0, 1), (1, 2))

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match="self-loop"):
            parse_graph("2\n0 0")

    def test_duplicate_rejected(self):
        with pytest.raises(GraphError, match="duplicate"):
            parse_graph("3\n0 1\n0 1")

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError, match="out of range"):
            parse_graph("2\n0 5")

    def test_malformed_line(self):
        with pytest.raises(GraphError, match="expected 'u v'"):
            parse_graph("3\n0 1 2")

    def test_comments_and_blanks_ignored(self):
        g = parse_graph("# a comment\n\n3\n# another\n0 1\n\n1 2\n")
        assert g.edges == ((0, 1), (1, 2))

    def test_missing_count(self):
        with pytest.raises(GraphError, match="vertex count"):
            parse_graph("# only a comment\n")

    def test_round_trip_on_generated_graph(self):
        g = generate_random_dag(20, 1.55, seed=1)
        assert g.vertex_count == 20
        assert g.edge_count == 31
        again = parse_graph(serialize_graph(g))
        assert set(again.edges) == set(g.edges)
        assert serialize_graph(again) == serialize_graph(g)


class TestRemoveCycles:
    def test_chain_untouched(self, chain3):
        result = remove_cycles(chain3)
        assert result.reversed_edges == frozenset()
        assert set(result.dag.edges) == set(chain3.edges)

    def test_two_cycle(self):
        g = DiGraph.build(2, [(0, 1), (1, 0)])
        result = remove_cycles(g)
        assert result.reversed_edges == frozenset({(1, 0)})
        assert set(result.dag.edges) == {(0, 1)}

    def test_random_digraph_becomes_acyclic(self):
        rng = random.Random(7)
        g = random_digraph(50, 120, rng)
        result = remove_cycles(g)
        topo_sort(result.dag)  # raises on a cycle

    @pytest.mark.parametrize("seed", range(12))
    def test_flip_map_reproduces_dag_edges(self, seed):
        rng = random.Random(seed)
        n = rng.randrange(2, 30)
        g = random_digraph(n, rng.randrange(0, n * 2), rng)
        result = remove_cycles(g)
        assert result.reversed_edges <= set(g.edges)
        flipped = {
            (v, u) if (u, v) in result.reversed_edges else (u, v) for u, v in g.edges
        }
        assert flipped == set(result.dag.edges)
        topo_sort(result.dag)


class TestTopoSort:
    def test_chain(self, chain3):
        assert topo_sort(chain3).rank == {0: 0, 1: 1, 2: 2}

    def test_isolated_vertices_min_id_tie_break(self):
        g = DiGraph.build(2, [])
        assert topo_sort(g).rank == {0: 0, 1: 1}

    def test_cycle_reports_a_vertex(self):
        g = DiGraph.build(2, [(0, 1), (1, 0)])
        with pytest.raises(GraphError, match="vertex 0"):
            topo_sort(g)

    @pytest.mark.parametrize("seed", range(8))
    def test_rank_ascends_along_edges(self, seed):
        g = generate_random_dag(40, 2.0, seed)
        rank = topo_sort(g).rank
        assert sorted(rank.values()) == list(range(40))
        for u, v in g.edges:
            assert rank[u] < rank[v]


class TestLongestPath:
    def test_chain(self, chain3):
        assert longest_path_ending_at(chain3) == {0: 0, 1: 1, 2: 2}

    def test_diamond(self, diamond):
        assert longest_path_ending_at(diamond) == {0: 0, 1: 1, 2: 1, 3: 2}

    def test_cycle_rejected(self):
        g = DiGraph.build(2, [(0, 1), (1, 0)])
        with pytest.raises(GraphError):
            longest_path_ending_at(g)

    @pytest.mark.parametrize("seed", range(10))
    def test_matches_full_path_enumeration(self, seed):
        rng = random.Random(seed)
        n = rng.randrange(2, 12)
        g = generate_random_dag(n, 1.5, seed)
        assert longest_path_ending_at(g) == longest_ending_at_bruteforce(g)

    def test_edge_invariant_medium_graph(self):
        g = generate_random_dag(30, 2.0, seed=3)
        value = longest_path_ending_at(g)
        for u, v in g.edges:
            assert value[v] >= value[u] + 1
        for v in range(30):
            preds = g.predecessors(v)
            if preds:
                assert any(value[v] == value[u] + 1 for u in preds)


@pytest.mark.parametrize("seed", range(10))
def test_topo_after_cycle_removal_never_fails(seed):
    rng = random.Random(seed)
    n = rng.randrange(1, 40)
    g = random_digraph(n, rng.randrange(0, 3 * n), rng)
    topo_sort(remove_cycles(g).dag)
