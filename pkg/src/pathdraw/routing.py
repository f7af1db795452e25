"""Cross-edge routing rules and per-target bundling.

A cross edge's bend count is fixed by the vertical distance between its
endpoints: none at distance one (a straight, possibly diagonal segment),
one at distance two (corner on a gap lane), two beyond that (a vertical
trunk leg on a gap lane). Incoming cross edges of one vertex, except those
at distance one, may share a trunk placed in the gap immediately left of
the target's path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .layout import Point

BUNDLE, SINGLE = "bundle", "edge"


class CrossRoute(NamedTuple):
    edge: tuple[int, int]
    bends: int
    polyline: tuple[Point, ...]
    lane: int | None = None


@dataclass(frozen=True)
class CrossBundle:
    target: int
    members: tuple[tuple[int, int], ...]
    trunk: tuple[int, tuple[int, int]]  # (lane column, (start row, finish row))


class GapOccupant(NamedTuple):
    """One packed item in an inter-path gap: a shared trunk or a lone route."""

    kind: str
    start_row: int
    finish_row: int
    target: int
    members: tuple[tuple[int, int], ...]


def bends_for_distance(dy: int) -> int:
    """Mandated bend count for a cross edge of vertical distance dy >= 1."""
    if dy == 1:
        return 0
    if dy == 2:
        return 1
    return 2


def gap_occupants(
    rows: dict[int, int] | list[int],
    path_of: dict[int, int] | list[int],
    cross_edges,
    bundle_incoming: bool,
) -> dict[int, list[GapOccupant]]:
    """Group cross edges into per-gap occupants for lane packing.

    The gap key is the target's path index (lanes sit immediately left of
    that path's spine). Distance-1 edges need no lane. With bundling on,
    targets with two or more qualifying incoming edges get one shared
    occupant spanning from the lowest source row to the target row; a lone
    qualifying edge keeps an individual occupant, spanning its own rows at
    distance three or more and only its corner row at distance two.
    """
    by_target: dict[int, list[tuple[int, int]]] = {}
    singles: list[tuple[int, int]] = []
    for u, v in sorted(cross_edges):
        if abs(rows[v] - rows[u]) < 2:
            continue
        if bundle_incoming:
            by_target.setdefault(v, []).append((u, v))
        else:
            singles.append((u, v))
    occupants: dict[int, list[GapOccupant]] = {}
    for v in sorted(by_target):
        edges = by_target[v]
        if len(edges) >= 2:
            spans = [rows[u] for u, _ in edges] + [rows[v]]
            occ = GapOccupant(
                kind=BUNDLE,
                start_row=min(spans),
                finish_row=max(spans),
                target=v,
                members=tuple(edges),
            )
            occupants.setdefault(path_of[v], []).append(occ)
        else:
            singles.extend(edges)
    for u, v in sorted(singles):
        lo, hi = sorted((rows[u], rows[v]))
        if hi - lo == 2:
            span = (lo, lo)  # only the corner row occupies the lane
        else:
            span = (lo, hi)
        occ = GapOccupant(
            kind=SINGLE,
            start_row=span[0],
            finish_row=span[1],
            target=v,
            members=((u, v),),
        )
        occupants.setdefault(path_of[v], []).append(occ)
    return occupants
