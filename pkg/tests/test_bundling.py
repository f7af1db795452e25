from __future__ import annotations

import random

import pytest

from oracles import crossing_pairs_bruteforce, max_overlap_depth
from pathdraw import (
    BundleInterval,
    DiGraph,
    PathDecomposition,
    classify_edges,
    compact,
    generate_random_dag,
    initial_layout,
    min_path_cover,
    pack_intervals,
    reorder_lanes,
    topo_sort,
    transitive_bundles,
)
from pathdraw.bundling import LanePacking, stack_crossings


def _compacted(g, d):
    return compact(g, initial_layout(g, d, topo_sort(g)))


def _bundles(g, d):
    lay = _compacted(g, d)
    return transitive_bundles(g, d, classify_edges(g, d), lay.y), lay


def _iv(s, f, anchor=0, members=None, spans=None, side="left"):
    members = members if members is not None else ((anchor, anchor + 1),)
    spans = spans if spans is not None else ((s, f),)
    return BundleInterval(
        path_index=0,
        anchor=anchor,
        direction="outgoing",
        members=members,
        start_row=s,
        finish_row=f,
        side=side,
        member_spans=spans,
    )


class TestGreedyExtraction:
    def test_single_anchor_with_two_out_edges(self):
        g = DiGraph.build(4, [(0, 1), (1, 2), (2, 3), (0, 2), (0, 3)])
        d = PathDecomposition(((0, 1, 2, 3),))
        intervals, lay = _bundles(g, d)
        assert len(intervals) == 1
        only = intervals[0]
        assert only.anchor == 0
        assert only.direction == "outgoing"
        assert only.members == ((0, 2), (0, 3))
        assert only.start_row == lay.y[0]
        assert only.finish_row == lay.y[3]

    def test_tie_break_prefers_lower_vertex_id(self):
        # outdegree(0) and indegree(4) are both 2; the lower id anchors first
        g = DiGraph.build(
            5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 4), (0, 3)]
        )
        d = PathDecomposition(((0, 1, 2, 3, 4),))
        intervals, _ = _bundles(g, d)
        assert [(iv.anchor, iv.direction, iv.members) for iv in intervals] == [
            (0, "outgoing", ((0, 3), (0, 4))),
            (1, "outgoing", ((1, 4),)),
        ]

    def test_no_transitive_edges(self, diamond, diamond_paths):
        intervals, _ = _bundles(diamond, diamond_paths)
        assert intervals == []

    def test_rightmost_path_goes_right_others_left(self):
        g = DiGraph.build(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3)]
        )
        d = PathDecomposition(((0, 1, 2), (3, 4, 5)))
        intervals, _ = _bundles(g, d)
        sides = {iv.path_index: iv.side for iv in intervals}
        assert sides == {0: "left", 1: "right"}

    @pytest.mark.parametrize("seed", range(10))
    def test_members_partition_transitive_set(self, seed):
        g = generate_random_dag(40, 3.0, seed)
        d = min_path_cover(g)
        cls = classify_edges(g, d)
        intervals, lay = _bundles(g, d)
        claimed: list = []
        for iv in intervals:
            claimed.extend(iv.members)
            assert all(iv.anchor in e for e in iv.members)
            assert iv.start_row <= iv.finish_row
            rows = [lay.y[v] for e in iv.members for v in e]
            assert iv.start_row == min(rows)
            assert iv.finish_row == max(rows)
        assert len(claimed) == len(set(claimed))
        assert set(claimed) == set(cls.transitive_edges)


class TestPacking:
    def test_disjoint_intervals_share_a_lane(self):
        packing = pack_intervals([_iv(0, 2, anchor=0), _iv(3, 5, anchor=1)])
        assert packing.lane_count == 1

    def test_three_way_overlap_needs_three_lanes(self):
        spans = [(0, 5), (1, 3), (2, 4)]
        packing = pack_intervals([_iv(s, f, anchor=i) for i, (s, f) in enumerate(spans)])
        assert packing.lane_count == 3
        assert max_overlap_depth(spans) == 3

    def test_closed_interval_convention_conflicts_on_shared_row(self):
        spans = [(0, 1), (1, 2)]
        packing = pack_intervals([_iv(s, f, anchor=i) for i, (s, f) in enumerate(spans)])
        assert packing.lane_count == 2
        assert max_overlap_depth(spans) == 2

    def test_lanes_never_share_a_row(self):
        rng = random.Random(4)
        spans = [(s, s + rng.randrange(0, 8)) for s in rng.sample(range(40), 20)]
        packing = pack_intervals([_iv(s, f, anchor=i) for i, (s, f) in enumerate(spans)])
        for lane in packing.lanes:
            ordered = sorted((iv.start_row, iv.finish_row) for iv in lane)
            for (s1, f1), (s2, f2) in zip(ordered, ordered[1:]):
                assert f1 < s2

    @pytest.mark.parametrize("seed", range(20))
    def test_lane_count_is_max_overlap_depth(self, seed):
        rng = random.Random(seed)
        count = rng.randrange(1, 50)
        spans = []
        for _ in range(count):
            s = rng.randrange(0, 60)
            spans.append((s, s + rng.randrange(0, 15)))
        packing = pack_intervals([_iv(s, f, anchor=i) for i, (s, f) in enumerate(spans)])
        assert packing.lane_count == max_overlap_depth(spans)


class TestReorder:
    def test_single_lane_identity(self):
        packing = pack_intervals([_iv(0, 4)])
        assert reorder_lanes(packing) == packing

    def test_improving_swap_is_taken(self):
        wide = _iv(0, 10, anchor=0, members=((0, 9),), spans=((0, 10),))
        narrow = _iv(2, 3, anchor=1, members=((1, 2),), spans=((2, 3),))
        packing = pack_intervals([wide, narrow])
        assert packing.lanes == ((wide,), (narrow,))
        assert stack_crossings(packing.lanes) == 1
        reordered = reorder_lanes(packing)
        assert reordered.lanes == ((narrow,), (wide,))
        assert stack_crossings(reordered.lanes) == 0

    def test_no_improvement_keeps_identity(self):
        a = _iv(0, 5, anchor=0, spans=((0, 5),))
        b = _iv(0, 5, anchor=1, members=((1, 3),), spans=((0, 5),))
        c = _iv(0, 5, anchor=2, members=((2, 4),), spans=((0, 5),))
        packing = LanePacking(((a,), (b,), (c,)))
        assert reorder_lanes(packing).lanes == packing.lanes

    def test_stack_model_matches_geometric_oracle(self):
        # materialize the two-bundle stack by hand: spine at x=10, lanes at 9 and 8
        routes_before = {
            (0, 9): ((10, 0), (9, 0), (9, 10), (10, 10)),
            (1, 2): ((10, 2), (8, 2), (8, 3), (10, 3)),
        }
        routes_after = {
            (0, 9): ((10, 0), (8, 0), (8, 10), (10, 10)),
            (1, 2): ((10, 2), (9, 2), (9, 3), (10, 3)),
        }
        wide = _iv(0, 10, anchor=0, members=((0, 9),), spans=((0, 10),))
        narrow = _iv(2, 3, anchor=1, members=((1, 2),), spans=((2, 3),))
        assert len(crossing_pairs_bruteforce(routes_before)) == stack_crossings(
            ((wide,), (narrow,))
        )
        assert len(crossing_pairs_bruteforce(routes_after)) == stack_crossings(
            ((narrow,), (wide,))
        )

    @pytest.mark.parametrize("seed", range(8))
    def test_never_worse_and_occupants_preserved(self, seed):
        rng = random.Random(seed)
        intervals = []
        for i in range(rng.randrange(2, 12)):
            s = rng.randrange(0, 20)
            f = s + rng.randrange(1, 10)
            members = tuple(
                sorted((rng.randrange(0, 50), 50 + rng.randrange(0, 50)) for _ in range(rng.randrange(1, 4)))
            )
            spans = tuple(sorted((s + rng.randrange(0, f - s), f) for _ in members))
            intervals.append(_iv(s, f, anchor=i, members=members, spans=spans))
        packing = pack_intervals(intervals)
        reordered = reorder_lanes(packing)
        assert stack_crossings(reordered.lanes) <= stack_crossings(packing.lanes)
        assert sorted(map(id, reordered.occupants())) == sorted(map(id, packing.occupants()))
