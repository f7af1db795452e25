"""Vertex-disjoint path decompositions: validation, edge classification,
and minimum path cover via bipartite matching.

A decomposition partitions the vertex set into directed paths; each path is
drawn on its own column. Every edge then falls into exactly one of three
categories: a *path* edge joins consecutive vertices of one path, a
*transitive* edge joins non-consecutive vertices of one path, and a *cross*
edge joins vertices of different paths.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import DiGraph, topo_sort


class DecompositionError(Exception):
    """Raised when a path decomposition is malformed or invalid for a graph."""


@dataclass(frozen=True)
class PathDecomposition:
    paths: tuple[tuple[int, ...], ...]

    @property
    def path_count(self) -> int:
        return len(self.paths)

    def position(self) -> dict[int, tuple[int, int]]:
        """Map each vertex to (path index, position within path)."""
        pos: dict[int, tuple[int, int]] = {}
        for i, path in enumerate(self.paths):
            for j, v in enumerate(path):
                pos[v] = (i, j)
        return pos


@dataclass(frozen=True)
class EdgeClassification:
    path_edges: frozenset[tuple[int, int]]
    transitive_edges: frozenset[tuple[int, int]]
    cross_edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class ValidationReport:
    missing: tuple[int, ...] = ()
    duplicated: tuple[int, ...] = ()
    non_edges: tuple[tuple[int, int], ...] = ()
    out_of_range: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        return not (self.missing or self.duplicated or self.non_edges or self.out_of_range)

    def describe(self) -> str:
        parts = []
        if self.out_of_range:
            parts.append(f"out-of-range vertices {list(self.out_of_range)}")
        if self.missing:
            parts.append(f"missing vertices {list(self.missing)}")
        if self.duplicated:
            parts.append(f"duplicated vertices {list(self.duplicated)}")
        if self.non_edges:
            parts.append(
                "consecutive pairs that are not edges "
                + ", ".join(f"({u}, {v})" for u, v in self.non_edges)
            )
        return "; ".join(parts) if parts else "ok"


def validate_decomposition(g: DiGraph, d: PathDecomposition) -> ValidationReport:
    """Check that d covers every vertex exactly once with true directed paths.

    Consecutive vertices of a path must be joined by an edge of g in that
    direction; reachability-only sequences are rejected.
    """
    seen: set[int] = set()
    duplicated: list[int] = []
    out_of_range: list[int] = []
    non_edges: list[tuple[int, int]] = []
    for path in d.paths:
        for v in path:
            if not (0 <= v < g.vertex_count):
                out_of_range.append(v)
                continue
            if v in seen:
                duplicated.append(v)
            seen.add(v)
        for u, v in zip(path, path[1:]):
            if 0 <= u < g.vertex_count and 0 <= v < g.vertex_count and not g.has_edge(u, v):
                non_edges.append((u, v))
    missing = [v for v in range(g.vertex_count) if v not in seen]
    return ValidationReport(
        missing=tuple(missing),
        duplicated=tuple(sorted(set(duplicated))),
        non_edges=tuple(non_edges),
        out_of_range=tuple(sorted(set(out_of_range))),
    )


def classify_edges(g: DiGraph, d: PathDecomposition) -> EdgeClassification:
    """Partition the edge set into path / transitive / cross edges."""
    path_idx = [0] * g.vertex_count
    order_idx = [0] * g.vertex_count
    for pi, path in enumerate(d.paths):
        for j, v in enumerate(path):
            path_idx[v] = pi
            order_idx[v] = j
    path_edges: set[tuple[int, int]] = set()
    transitive: set[tuple[int, int]] = set()
    cross: set[tuple[int, int]] = set()
    for u, v in g.edges:
        if path_idx[u] != path_idx[v]:
            cross.add((u, v))
        elif order_idx[v] == order_idx[u] + 1:
            path_edges.add((u, v))
        else:
            transitive.add((u, v))
    return EdgeClassification(frozenset(path_edges), frozenset(transitive), frozenset(cross))


def _hopcroft_karp(n: int, adj: list[list[int]]) -> list[int]:
    """Maximum matching on the split bipartite graph; returns match_left.

    Left copy u is the out-side of vertex u, right copy v the in-side;
    one bipartite edge per graph edge. Augmenting paths are explored in
    ascending id order so the matching is deterministic.
    """
    INF = n + 1
    match_left = [-1] * n
    match_right = [-1] * n
    dist = [INF] * n

    def bfs() -> bool:
        queue = deque()
        for u in range(n):
            if match_left[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_right[v]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = match_right[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = v
                match_right[v] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in range(n):
            if match_left[u] == -1:
                dfs(u)
    return match_left


def min_path_cover(g: DiGraph) -> PathDecomposition:
    """Minimum-cardinality vertex-disjoint path cover of a DAG.

    The cover size is n minus the maximum matching of the split bipartite
    graph. Resulting paths are ordered by the topological rank of their
    first vertex, which fixes the column order of the drawing.
    """
    rank = topo_sort(g).rank  # also rejects cyclic input
    adj: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in sorted(g.edges):
        adj[u].append(v)
    match_left = _hopcroft_karp(g.vertex_count, adj)
    next_of = {u: v for u, v in enumerate(match_left) if v != -1}
    has_prev = set(next_of.values())
    paths: list[tuple[int, ...]] = []
    for start in range(g.vertex_count):
        if start in has_prev:
            continue
        path = [start]
        while path[-1] in next_of:
            path.append(next_of[path[-1]])
        paths.append(tuple(path))
    paths.sort(key=lambda p: rank[p[0]])
    return PathDecomposition(tuple(paths))


def parse_decomposition(text: str, g: DiGraph) -> PathDecomposition:
    """Parse a path-list document and validate it against g.

    One path per line, vertex ids separated by single spaces; ``#`` starts a
    comment. Path order in the file is the column order of the drawing.
    """
    paths: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(" ")
        if not all(p.isdigit() for p in parts):
            raise DecompositionError(f"line {lineno}: expected vertex ids, got {line!r}")
        paths.append(tuple(int(p) for p in parts))
    d = PathDecomposition(tuple(paths))
    report = validate_decomposition(g, d)
    if not report.ok:
        raise DecompositionError(f"invalid decomposition: {report.describe()}")
    return d
