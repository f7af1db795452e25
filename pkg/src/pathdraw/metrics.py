"""Layout quality metrics: crossings, bends, width, height, area.

All coordinates are grid integers, so orientation tests are exact and there
is no epsilon anywhere. A crossing is a pair of edge routes whose polylines
cross transversally at a point that is not a shared endpoint vertex;
touches, T-junctions, and collinear overlaps (bundle trunks) do not count.
A route passing exactly through some other vertex's grid point is not a
crossing either; it is reported separately as a layout-quality warning.
"""

from __future__ import annotations

from .layout import Layout, MetricsReport, Point

Segment = tuple[Point, Point]


def orientation(o: Point, a: Point, b: Point) -> int:
    """Sign of the cross product (a - o) x (b - o): exact on integers."""
    val = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    return (val > 0) - (val < 0)


def segments_properly_cross(p1: Point, q1: Point, p2: Point, q2: Point) -> bool:
    """True when the open interiors of two segments cross transversally."""
    d1 = orientation(p2, q2, p1)
    d2 = orientation(p2, q2, q1)
    d3 = orientation(p1, q1, p2)
    d4 = orientation(p1, q1, q2)
    return d1 * d2 < 0 and d3 * d4 < 0


def route_segments(route: tuple[Point, ...]) -> list[Segment]:
    return [
        (route[i], route[i + 1])
        for i in range(len(route) - 1)
        if route[i] != route[i + 1]
    ]


def routes_cross(a: tuple[Point, ...], b: tuple[Point, ...]) -> bool:
    """Whether two polylines cross (any transversal segment pair)."""
    for p1, q1 in route_segments(a):
        for p2, q2 in route_segments(b):
            if segments_properly_cross(p1, q1, p2, q2):
                return True
    return False


def _bbox(route: tuple[Point, ...]) -> tuple[int, int, int, int]:
    xs = [p[0] for p in route]
    ys = [p[1] for p in route]
    return min(xs), max(xs), min(ys), max(ys)


def count_crossings(layout: Layout) -> int:
    """Number of unordered route pairs that cross.

    Routes are swept in ascending bounding-box order so pairs whose boxes
    cannot meet are never tested; surviving candidates are settled with the
    exact transversality predicate.
    """
    drawn = [route for _, route in sorted(layout.routes.items()) if len(route) >= 2]
    items = sorted(
        ((_bbox(route), route) for route in drawn), key=lambda t: t[0][0]
    )
    total = 0
    for i, ((_, xmax_i, ymin_i, ymax_i), route_i) in enumerate(items):
        for j in range(i + 1, len(items)):
            (xmin_j, _, ymin_j, ymax_j), route_j = items[j]
            if xmin_j > xmax_i:
                break
            if ymin_j > ymax_i or ymax_j < ymin_i:
                continue
            if routes_cross(route_i, route_j):
                total += 1
    return total


def count_bends(layout: Layout) -> int:
    """Interior polyline corners, summed over all drawn routes."""
    total = 0
    for _, route in sorted(layout.routes.items()):
        for i in range(1, len(route) - 1):
            if orientation(route[i - 1], route[i], route[i + 1]) != 0:
                total += 1
            else:
                # collinear: a reversal still changes direction
                ax = route[i][0] - route[i - 1][0]
                ay = route[i][1] - route[i - 1][1]
                bx = route[i + 1][0] - route[i][0]
                by = route[i + 1][1] - route[i][1]
                if ax * bx + ay * by < 0:
                    total += 1
    return total


def measure(layout: Layout) -> MetricsReport:
    """Full report: crossings, bends, and the enclosing-rectangle numbers.

    Width counts distinct columns used by vertices or route points (lanes
    included); height is the count of distinct rows in use minus one, i.e.
    the maximum row index; area is their product.
    """
    xs = set(layout.x.values())
    ys = set(layout.y.values())
    for route in layout.routes.values():
        for px, py in route:
            xs.add(px)
            ys.add(py)
    width = len(xs)
    height = max(len(ys) - 1, 0)
    return MetricsReport(
        crossings=count_crossings(layout),
        bends=count_bends(layout),
        width=width,
        height=height,
        area=width * height,
    )


def _point_on_segment(pt: Point, a: Point, b: Point) -> bool:
    if orientation(a, b, pt) != 0:
        return False
    return min(a[0], b[0]) <= pt[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= pt[1] <= max(
        a[1], b[1]
    )


def count_vertex_touches(layout: Layout) -> int:
    """Routes passing exactly through a non-incident vertex's grid point.

    These are conservative non-crossings for the metric; each (edge, vertex)
    incidence counts once so drawings can be flagged for review.
    """
    positions = {v: (layout.x[v], layout.y[v]) for v in layout.x}
    touches = 0
    for (u, w), route in sorted(layout.routes.items()):
        segs = route_segments(route)
        if not segs:
            continue
        for v in sorted(positions):
            if v == u or v == w:
                continue
            pt = positions[v]
            if any(_point_on_segment(pt, a, b) for a, b in segs):
                touches += 1
    return touches
