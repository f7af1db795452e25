"""Grid placement: the initial column-per-path drawing and vertical compaction.

Coordinates are integer grid cells. Row 0 is the top of the rendered output
and every edge runs from a lower to a higher row. The initial drawing puts
each vertex at the row of its topological rank (height n-1); compaction
re-rows each vertex one step below its highest predecessor, which brings the
height down to the longest-path length exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .decomposition import EdgeClassification, PathDecomposition, classify_edges
from .graph import DiGraph, TopoOrder

Point = tuple[int, int]

# Edge categories and column tags used across the drawing pipeline.
PATH, TRANSITIVE, CROSS = "path", "transitive", "cross"
COL_SPINE = "path-spine"
COL_LANE_LEFT = "bundle-lane-left"
COL_LANE_RIGHT = "bundle-lane-right"
COL_CROSS = "cross-lane"


@dataclass(frozen=True)
class Layout:
    x: dict[int, int]
    y: dict[int, int]
    routes: dict[tuple[int, int], tuple[Point, ...]]
    category: dict[tuple[int, int], str]
    column_meta: dict[int, str]
    paths: tuple[tuple[int, ...], ...]

    def spine_of(self, path_index: int) -> int:
        """Column currently holding the given path's vertices."""
        return self.x[self.paths[path_index][0]]


@dataclass(frozen=True)
class MetricsReport:
    crossings: int
    bends: int
    width: int
    height: int
    area: int


@dataclass(frozen=True)
class PropertyViolation:
    kind: str
    detail: tuple[int, int]

    def __str__(self) -> str:
        if self.kind == "distinct-rows":
            u, v = self.detail
            return f"vertices {u} and {v} of one path share a row"
        v, _ = self.detail
        return f"vertex {v} has no predecessor one row above"


def initial_layout(
    g: DiGraph,
    d: PathDecomposition,
    t: TopoOrder,
    classification: EdgeClassification | None = None,
) -> Layout:
    """Place each path on its own column with rows given by topological rank.

    Spine columns are provisional consecutive integers; the bundling passes
    insert lanes between them and re-index the grid at the end.
    """
    if classification is None:
        classification = classify_edges(g, d)
    pos = d.position()
    x = {v: pos[v][0] for v in range(g.vertex_count)}
    y = dict(t.rank)
    category: dict[tuple[int, int], str] = {}
    for e in g.edges:
        if e in classification.path_edges:
            category[e] = PATH
        elif e in classification.transitive_edges:
            category[e] = TRANSITIVE
        else:
            category[e] = CROSS
    routes = {
        (u, v): ((x[u], y[u]), (x[v], y[v])) for u, v in g.edges
    }
    column_meta = {i: COL_SPINE for i in range(d.path_count)}
    return Layout(x=x, y=y, routes=routes, category=category, column_meta=column_meta, paths=d.paths)


def compact(g: DiGraph, layout: Layout) -> Layout:
    """Re-row every vertex one step above its highest incoming neighbor.

    Vertices are visited in ascending current-row order (a topological
    order), sources land on row 0, and the resulting height equals the
    longest-path length. Columns are untouched. O(n + m).
    """
    rows = layout.y
    # rank rows are a permutation of 0..n-1, so bucketing replaces sorting
    order: list[int] = [-1] * g.vertex_count
    for v, r in rows.items():
        if not (0 <= r < g.vertex_count) or order[r] != -1:
            order = sorted(range(g.vertex_count), key=lambda v: (rows[v], v))
            break
        order[r] = v
    y: dict[int, int] = {}
    for v in order:
        preds = g.predecessors(v)
        y[v] = max((y[u] + 1 for u in preds), default=0)
    routes = {
        (u, v): ((layout.x[u], y[u]), (layout.x[v], y[v])) for u, v in g.edges
    }
    return replace(layout, y=y, routes=routes)


def assert_properties(g: DiGraph, layout: Layout) -> PropertyViolation | None:
    """Self-check for a compacted layout; None means both properties hold.

    Property 1: vertices of one path occupy distinct rows. Property 2:
    every vertex off row 0 has an incoming edge from exactly one row above.
    """
    for path in layout.paths:
        seen: dict[int, int] = {}
        for v in path:
            row = layout.y[v]
            if row in seen:
                return PropertyViolation("distinct-rows", (seen[row], v))
            seen[row] = v
    for v in range(g.vertex_count):
        if layout.y[v] == 0:
            continue
        if not any(layout.y[u] == layout.y[v] - 1 for u in g.predecessors(v)):
            return PropertyViolation("predecessor-row", (v, layout.y[v]))
    return None


def layout_height(layout: Layout) -> int:
    """Maximum row index in use (0 for an empty or single-row layout)."""
    return max(layout.y.values(), default=0)
