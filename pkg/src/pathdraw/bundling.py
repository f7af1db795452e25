"""Bundling of transitive edges into side-lane trunks.

Each bundle groups the current transitive in- or out-edges of one vertex
(the anchor) and is represented by a vertical interval on a lane beside the
path's spine. Bundles are extracted greedily by maximum transitive degree,
packed into the minimum number of lanes by a first-fit scan over intervals
sorted by start row, and optionally permuted afterwards to shed crossings
between trunks and connectors.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from heapq import heapify, heappush, heappop
from itertools import permutations

from .decomposition import EdgeClassification, PathDecomposition
from .graph import DiGraph

INCOMING, OUTGOING = "incoming", "outgoing"
LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class BundleInterval:
    path_index: int
    anchor: int
    direction: str
    members: tuple[tuple[int, int], ...]
    start_row: int
    finish_row: int
    side: str
    lane: int = -1
    # row span of each member's trunk leg, parallel to members
    member_spans: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class LanePacking:
    lanes: tuple[tuple, ...]

    @property
    def lane_count(self) -> int:
        return len(self.lanes)

    def occupants(self) -> list:
        return [iv for lane in self.lanes for iv in lane]


def transitive_bundles(
    g: DiGraph,
    d: PathDecomposition,
    classification: EdgeClassification,
    rows: dict[int, int] | list[int],
) -> list[BundleInterval]:
    """Greedy per-path extraction of transitive-edge bundles.

    Repeatedly pick the vertex with the highest remaining transitive
    indegree or outdegree (ties: lower vertex id, then incoming before
    outgoing), bundle those edges into one interval, drop them, and update
    degrees. ``rows`` is the compacted vertical placement. Intervals of the
    rightmost path go on its right side; all others go left. A
    lazy-deletion max-heap keeps this O(t log t).
    """
    out: list[BundleInterval] = []
    last = d.path_count - 1
    for pi, path in enumerate(d.paths):
        on_path = set(path)
        remaining = {
            (u, v)
            for (u, v) in classification.transitive_edges
            if u in on_path and v in on_path
        }
        if not remaining:
            continue
        indeg: dict[int, set[tuple[int, int]]] = {v: set() for v in path}
        outdeg: dict[int, set[tuple[int, int]]] = {v: set() for v in path}
        for u, v in remaining:
            outdeg[u].add((u, v))
            indeg[v].add((u, v))
        # heap key: (-degree, vertex, 0 incoming / 1 outgoing)
        heap = []
        for v in path:
            if indeg[v]:
                heap.append((-len(indeg[v]), v, 0))
            if outdeg[v]:
                heap.append((-len(outdeg[v]), v, 1))
        heapify(heap)
        side = RIGHT if pi == last else LEFT
        while heap:
            neg, v, which = heappop(heap)
            edges = indeg[v] if which == 0 else outdeg[v]
            if not edges or -neg != len(edges):
                continue  # stale heap entry
            members = tuple(sorted(edges))
            member_rows = [rows[u] for e in members for u in e]
            spans = tuple(
                (min(rows[a], rows[b]), max(rows[a], rows[b])) for a, b in members
            )
            out.append(
                BundleInterval(
                    path_index=pi,
                    anchor=v,
                    direction=INCOMING if which == 0 else OUTGOING,
                    members=members,
                    start_row=min(member_rows),
                    finish_row=max(member_rows),
                    side=side,
                    member_spans=spans,
                )
            )
            for u, w in members:
                outdeg[u].discard((u, w))
                indeg[w].discard((u, w))
            touched = {u for e in members for u in e}
            for u in touched:
                if indeg[u]:
                    heappush(heap, (-len(indeg[u]), u, 0))
                if outdeg[u]:
                    heappush(heap, (-len(outdeg[u]), u, 1))
    return out


def pack_intervals(intervals) -> LanePacking:
    """First-fit interval partitioning into the optimum number of lanes.

    Intervals are scanned in ascending start-row order and each goes on the
    first lane (nearest the spine) where it fits. Closed-interval overlap:
    sharing even one row is a conflict. The lane count equals the maximum
    number of intervals covering any single row.
    """
    ordered = sorted(
        enumerate(intervals), key=lambda t: (t[1].start_row, t[1].finish_row, t[0])
    )
    lanes: list[list] = []
    last_finish: list[int] = []
    for _, iv in ordered:
        for li in range(len(lanes)):
            if iv.start_row > last_finish[li]:
                lanes[li].append(iv)
                last_finish[li] = iv.finish_row
                break
        else:
            lanes.append([iv])
            last_finish.append(iv.finish_row)
    return LanePacking(tuple(tuple(lane) for lane in lanes))


def _pair_crossings(nearer: BundleInterval, farther: BundleInterval) -> int:
    """Member pairs where the farther bundle's connectors pierce the nearer's legs."""
    count = 0
    for lo_a, hi_a in nearer.member_spans:
        for lo_b, hi_b in farther.member_spans:
            if lo_a < lo_b < hi_a or lo_a < hi_b < hi_a:
                count += 1
    return count


def stack_crossings(lanes: tuple[tuple, ...]) -> int:
    """Trunk/connector crossings within one side stack, by lane order."""
    total = 0
    for near_i in range(len(lanes)):
        for far_i in range(near_i + 1, len(lanes)):
            for a in lanes[near_i]:
                for b in lanes[far_i]:
                    total += _pair_crossings(a, b)
    return total


_EXHAUSTIVE_LIMIT = 6


def reorder_lanes(packing: LanePacking) -> LanePacking:
    """Permute lanes to reduce trunk/connector crossings.

    Exhaustive over all permutations for small stacks, adjacent-swap hill
    climbing otherwise. The result never has more crossings than the input,
    and ties keep the incumbent order. Lane-pair costs are precomputed once
    so candidate orders are scored without re-scanning members.
    """
    lanes = packing.lanes
    count = len(lanes)
    if count <= 1:
        return packing
    # pair_cost[i][j]: crossings contributed when lane i sits nearer than j
    pair_cost = [
        [
            sum(_pair_crossings(a, b) for a in lanes[i] for b in lanes[j])
            if i != j
            else 0
            for j in range(count)
        ]
        for i in range(count)
    ]

    def cost_of(order: tuple[int, ...]) -> int:
        return sum(
            pair_cost[order[i]][order[j]]
            for i in range(count)
            for j in range(i + 1, count)
        )

    identity = tuple(range(count))
    if count <= _EXHAUSTIVE_LIMIT:
        best = identity
        best_cost = cost_of(identity)
        for perm in permutations(range(count)):
            c = cost_of(perm)
            if c < best_cost:
                best, best_cost = perm, c
        return LanePacking(tuple(lanes[i] for i in best))
    order = list(identity)
    cost = cost_of(identity)
    improved = True
    while improved:
        improved = False
        for i in range(count - 1):
            order[i], order[i + 1] = order[i + 1], order[i]
            swapped = cost_of(tuple(order))
            if swapped < cost:
                cost = swapped
                improved = True
            else:
                order[i], order[i + 1] = order[i + 1], order[i]
    return LanePacking(tuple(lanes[i] for i in order))


def with_lane_indices(packing: LanePacking) -> list[BundleInterval]:
    """Copies of the packed intervals with their lane index filled in."""
    out = []
    for li, lane in enumerate(packing.lanes):
        for iv in lane:
            out.append(replace(iv, lane=li))
    return out
