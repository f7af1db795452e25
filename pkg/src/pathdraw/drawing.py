"""Final grid assembly: lane columns, route polylines, bundle records.

One pass lays out the whole drawing: spines get their paths' vertices,
transitive bundle stacks sit beside their spines (left everywhere, right of
the last spine), cross-edge lanes fill the gap immediately left of each
target spine, and every column is re-indexed onto a dense integer grid.
Gaps are ordered left-to-right as cross lanes, then the next spine's
transitive lanes, then the spine itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundling import (
    LEFT,
    RIGHT,
    BundleInterval,
    LanePacking,
    pack_intervals,
    reorder_lanes,
    transitive_bundles,
    with_lane_indices,
)
from .decomposition import EdgeClassification, PathDecomposition, classify_edges
from .graph import DiGraph, TopoOrder, topo_sort
from .layout import (
    COL_CROSS,
    COL_LANE_LEFT,
    COL_LANE_RIGHT,
    COL_SPINE,
    CROSS,
    PATH,
    TRANSITIVE,
    Layout,
    Point,
)
from .routing import (
    BUNDLE,
    CrossBundle,
    CrossRoute,
    bends_for_distance,
    gap_occupants,
)


@dataclass(frozen=True)
class BundleRecord:
    id: int
    kind: str  # "transitive" | "cross"
    anchor_or_target: int
    lane: int  # final grid column of the trunk
    span: tuple[int, int]
    members: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Drawing:
    layout: Layout
    transitive_intervals: tuple[BundleInterval, ...]
    cross_bundles: tuple[CrossBundle, ...]
    cross_routes: tuple[CrossRoute, ...]
    bundles: tuple[BundleRecord, ...]
    bundle_of: dict[tuple[int, int], int]


def draw(
    g: DiGraph,
    d: PathDecomposition,
    t: TopoOrder | None = None,
    *,
    classification: EdgeClassification | None = None,
    rows: dict[int, int] | None = None,
    compact_rows: bool = True,
    bundle_transitive_edges: bool = True,
    bundle_cross_incoming: bool = True,
    reorder: bool = True,
) -> Drawing:
    """Produce the complete drawing for a DAG and decomposition.

    ``rows`` overrides the vertical placement (used when a caller already
    holds a compacted layout); otherwise rows come from the topological
    ranks, compacted unless ``compact_rows`` is off. Disabling
    ``bundle_transitive_edges`` hides transitive edges entirely (empty
    routes, no lanes); disabling ``bundle_cross_incoming`` keeps every cross
    edge on its own lane occupancy.
    """
    if t is None:
        t = topo_sort(g)
    cls = classification if classification is not None else classify_edges(g, d)
    n = g.vertex_count
    # dense ids let the hot loops run on lists instead of dicts
    y: list[int] = [0] * n
    if rows is not None:
        for v in range(n):
            y[v] = rows[v]
    elif compact_rows:
        # one row above the highest predecessor, visiting in rank order
        order = [0] * n
        for v, r in t.rank.items():
            order[r] = v
        for v in order:
            best = -1
            for u in g.predecessors(v):
                if y[u] > best:
                    best = y[u]
            y[v] = best + 1
    else:
        for v, r in t.rank.items():
            y[v] = r
    k = d.path_count
    path_of: list[int] = [0] * n
    for pi, path in enumerate(d.paths):
        for v in path:
            path_of[v] = pi

    trans_packings: dict[tuple[int, str], LanePacking] = {}
    if bundle_transitive_edges:
        groups: dict[tuple[int, str], list[BundleInterval]] = {}
        for iv in transitive_bundles(g, d, cls, y):
            groups.setdefault((iv.path_index, iv.side), []).append(iv)
        for key in sorted(groups):
            packing = pack_intervals(groups[key])
            if reorder:
                packing = reorder_lanes(packing)
            trans_packings[key] = packing

    cross_packings: dict[int, LanePacking] = {}
    for gap, occupants in sorted(
        gap_occupants(y, path_of, cls.cross_edges, bundle_cross_incoming).items()
    ):
        cross_packings[gap] = pack_intervals(occupants)

    # Dense column grid, left to right.
    spine_x: dict[int, int] = {}
    trans_lane_x: dict[tuple[int, str, int], int] = {}
    cross_lane_x: dict[tuple[int, int], int] = {}
    column_meta: dict[int, str] = {}
    col = 0
    for i in range(k):
        cp = cross_packings.get(i)
        if cp is not None:
            for li in range(cp.lane_count - 1, -1, -1):
                cross_lane_x[(i, li)] = col
                column_meta[col] = COL_CROSS
                col += 1
        tp = trans_packings.get((i, LEFT))
        if tp is not None:
            for li in range(tp.lane_count - 1, -1, -1):
                trans_lane_x[(i, LEFT, li)] = col
                column_meta[col] = COL_LANE_LEFT
                col += 1
        spine_x[i] = col
        column_meta[col] = COL_SPINE
        col += 1
    tp = trans_packings.get((k - 1, RIGHT)) if k else None
    if tp is not None:
        for li in range(tp.lane_count):
            trans_lane_x[(k - 1, RIGHT, li)] = col
            column_meta[col] = COL_LANE_RIGHT
            col += 1

    x: list[int] = [0] * n
    for pi, path in enumerate(d.paths):
        sx = spine_x[pi]
        for v in path:
            x[v] = sx

    member_lane: dict[tuple[int, int], int] = {}
    lane_assigned: list[BundleInterval] = []
    for (pi, side), packing in sorted(trans_packings.items()):
        for iv in with_lane_indices(packing):
            lane_assigned.append(iv)
            lx = trans_lane_x[(pi, side, iv.lane)]
            for e in iv.members:
                member_lane[e] = lx

    cross_edge_lane: dict[tuple[int, int], int] = {}
    cross_bundles: list[CrossBundle] = []
    for gap, packing in sorted(cross_packings.items()):
        for li, lane_items in enumerate(packing.lanes):
            lx = cross_lane_x[(gap, li)]
            for occ in lane_items:
                for e in occ.members:
                    cross_edge_lane[e] = lx
                if occ.kind == BUNDLE:
                    cross_bundles.append(
                        CrossBundle(
                            target=occ.target,
                            members=occ.members,
                            trunk=(lx, (occ.start_row, occ.finish_row)),
                        )
                    )

    position: list[Point] = [(x[v], y[v]) for v in range(n)]
    routes: dict[tuple[int, int], tuple[Point, ...]] = {}
    category: dict[tuple[int, int], str] = {}
    cross_routes: list[CrossRoute] = []
    for u, v in sorted(g.edges):
        e = (u, v)
        if e in cls.path_edges:
            category[e] = PATH
            routes[e] = (position[u], position[v])
        elif e in cls.transitive_edges:
            category[e] = TRANSITIVE
            if bundle_transitive_edges:
                lx = member_lane[e]
                routes[e] = (position[u], (lx, y[u]), (lx, y[v]), position[v])
            else:
                routes[e] = ()
        else:
            category[e] = CROSS
            dy = y[v] - y[u]
            bends = bends_for_distance(dy)
            if dy == 1:
                poly: tuple[Point, ...] = (position[u], position[v])
                lane = None
            elif dy == 2:
                lane = cross_edge_lane[e]
                poly = (position[u], (lane, y[u]), position[v])
            else:
                lane = cross_edge_lane[e]
                poly = (position[u], (lane, y[u]), (lane, y[v]), position[v])
            routes[e] = poly
            cross_routes.append(CrossRoute(edge=e, bends=bends, polyline=poly, lane=lane))

    records: list[BundleRecord] = []
    bundle_of: dict[tuple[int, int], int] = {}
    for iv in sorted(
        lane_assigned,
        key=lambda iv: (iv.path_index, iv.side, iv.lane, iv.start_row, iv.anchor),
    ):
        rid = len(records)
        records.append(
            BundleRecord(
                id=rid,
                kind="transitive",
                anchor_or_target=iv.anchor,
                lane=trans_lane_x[(iv.path_index, iv.side, iv.lane)],
                span=(iv.start_row, iv.finish_row),
                members=iv.members,
            )
        )
        for e in iv.members:
            bundle_of[e] = rid
    for cb in sorted(cross_bundles, key=lambda b: b.target):
        rid = len(records)
        records.append(
            BundleRecord(
                id=rid,
                kind="cross",
                anchor_or_target=cb.target,
                lane=cb.trunk[0],
                span=cb.trunk[1],
                members=cb.members,
            )
        )
        for e in cb.members:
            bundle_of[e] = rid

    final = Layout(
        x=dict(enumerate(x)),
        y=dict(enumerate(y)),
        routes=routes,
        category=category,
        column_meta=column_meta,
        paths=d.paths,
    )
    return Drawing(
        layout=final,
        transitive_intervals=tuple(lane_assigned),
        cross_bundles=tuple(cross_bundles),
        cross_routes=tuple(cross_routes),
        bundles=tuple(records),
        bundle_of=bundle_of,
    )


def _graph_of(layout: Layout) -> DiGraph:
    return DiGraph.build(len(layout.x), sorted(layout.routes.keys()))


def _had_transitive_lanes(layout: Layout) -> bool:
    return any(
        tag in (COL_LANE_LEFT, COL_LANE_RIGHT) for tag in layout.column_meta.values()
    )


def bundle_transitive(
    g: DiGraph,
    d: PathDecomposition,
    classification: EdgeClassification,
    layout: Layout,
) -> tuple[list[BundleInterval], Layout]:
    """Bundle all transitive edges of a compacted layout into lane trunks.

    Returns the lane-assigned intervals and a layout whose member routes
    follow the trunk geometry (two bends per member). Cross edges are routed
    individually; the cross-bundling pass comes after.
    """
    drawing = draw(
        g,
        d,
        classification=classification,
        rows=layout.y,
        bundle_transitive_edges=True,
        bundle_cross_incoming=False,
        reorder=False,
    )
    return list(drawing.transitive_intervals), drawing.layout


def route_cross_edges(
    layout: Layout, classification: EdgeClassification
) -> list[CrossRoute]:
    """Route every cross edge with its distance-mandated bend count."""
    g = _graph_of(layout)
    d = PathDecomposition(layout.paths)
    drawing = draw(
        g,
        d,
        classification=classification,
        rows=layout.y,
        bundle_transitive_edges=_had_transitive_lanes(layout),
        bundle_cross_incoming=False,
        reorder=False,
    )
    return list(drawing.cross_routes)


def bundle_cross_edges(
    layout: Layout, routes: list[CrossRoute]
) -> tuple[list[CrossBundle], list[CrossRoute]]:
    """Merge qualifying incoming cross edges per target into shared trunks.

    Targets with at most one qualifying edge (vertical distance >= 2) keep
    the individual route they were given; rerouting is deterministic, so the
    returned non-member routes agree with the input set.
    """
    g = _graph_of(layout)
    d = PathDecomposition(layout.paths)
    drawing = draw(
        g,
        d,
        rows=layout.y,
        bundle_transitive_edges=_had_transitive_lanes(layout),
        bundle_cross_incoming=True,
        reorder=False,
    )
    return list(drawing.cross_bundles), list(drawing.cross_routes)
