"""Directed-graph core: edge-list parsing, cycle removal, topological order,
and the longest-path table used for height checks.

Vertices are dense integers 0..n-1. Graphs are immutable after construction
and safe to share; every operation here is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from heapq import heapify, heappush, heappop


class GraphError(Exception):
    """Invalid graph input (bad edge list, self-loop, duplicate, cycle)."""


@dataclass(frozen=True)
class DiGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    _succ: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())
    _pred: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    @classmethod
    def build(
        cls,
        vertex_count: int,
        edges,
        dedupe: bool = False,
    ) -> "DiGraph":
        """Construct a graph, rejecting self-loops and out-of-range ids.

        Duplicate edge pairs are rejected unless ``dedupe`` is set, in which
        case they are collapsed to one.
        """
        if vertex_count < 0:
            raise GraphError(f"vertex count must be non-negative, got {vertex_count}")
        seen: set[tuple[int, int]] = set()
        clean: list[tuple[int, int]] = []
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                if dedupe:
                    continue
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            clean.append((u, v))
        succ: list[list[int]] = [[] for _ in range(vertex_count)]
        pred: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in clean:
            succ[u].append(v)
            pred[v].append(u)
        return cls(
            vertex_count,
            tuple(clean),
            tuple(tuple(sorted(s)) for s in succ),
            tuple(tuple(sorted(p)) for p in pred),
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def successors(self, v: int) -> tuple[int, ...]:
        return self._succ[v]

    def predecessors(self, v: int) -> tuple[int, ...]:
        return self._pred[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._succ[u]


@dataclass(frozen=True)
class CycleRemovalResult:
    dag: DiGraph
    reversed_edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class TopoOrder:
    rank: dict[int, int]

    def order(self) -> list[int]:
        """Vertices sorted by rank."""
        return sorted(self.rank, key=self.rank.__getitem__)


def parse_graph(text: str) -> DiGraph:
    """Parse an edge-list document.

    Format: the first non-comment line is the vertex count; each following
    line is ``u v`` (ASCII decimal, single space). Lines starting with ``#``
    are comments; blank lines are ignored.
    """
    vertex_count: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if vertex_count is None:
            if not line.isdigit():
                raise GraphError(f"line {lineno}: expected vertex count, got {line!r}")
            vertex_count = int(line)
            continue
        parts = line.split(" ")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if vertex_count is None:
        raise GraphError("empty document: missing vertex count")
    try:
        return DiGraph.build(vertex_count, edges)
    except GraphError as exc:
        raise GraphError(f"bad edge list: {exc}") from exc


def serialize_graph(g: DiGraph) -> str:
    """Emit the canonical edge-list form: count, then edges sorted by (u, v)."""
    lines = [str(g.vertex_count)]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def remove_cycles(g: DiGraph) -> CycleRemovalResult:
    """Break cycles by reversing depth-first back edges.

    Roots are taken in ascending id order and neighbors visited in ascending
    id order, so the reversed set is deterministic. Iterative DFS: recursion
    depth would be a vertex-count liability.
    """
    WHITE, GRAY, BLACK = 0, 1, 2
    state = [WHITE] * g.vertex_count
    back: set[tuple[int, int]] = set()
    for root in range(g.vertex_count):
        if state[root] != WHITE:
            continue
        # stack holds (vertex, index into its successor tuple)
        stack: list[tuple[int, int]] = [(root, 0)]
        state[root] = GRAY
        while stack:
            v, i = stack[-1]
            succ = g.successors(v)
            if i < len(succ):
                stack[-1] = (v, i + 1)
                w = succ[i]
                if state[w] == GRAY:
                    back.add((v, w))
                elif state[w] == WHITE:
                    state[w] = GRAY
                    stack.append((w, 0))
            else:
                state[v] = BLACK
                stack.pop()
    if not back:
        return CycleRemovalResult(g, frozenset())
    flipped = [(v, u) if (u, v) in back else (u, v) for u, v in g.edges]
    dag = DiGraph.build(g.vertex_count, flipped, dedupe=True)
    return CycleRemovalResult(dag, frozenset(back))


def topo_sort(g: DiGraph) -> TopoOrder:
    """Kahn's algorithm with a min-id heap, so the order is reproducible.

    Raises GraphError naming a vertex on a cycle if the graph is cyclic.
    """
    indeg = [0] * g.vertex_count
    for _, v in g.edges:
        indeg[v] += 1
    heap: list[int] = [v for v in range(g.vertex_count) if indeg[v] == 0]
    heapify(heap)
    rank: dict[int, int] = {}
    while heap:
        v = heappop(heap)
        rank[v] = len(rank)
        for w in g.successors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                heappush(heap, w)
    if len(rank) != g.vertex_count:
        culprit = min(v for v in range(g.vertex_count) if v not in rank)
        raise GraphError(f"graph is cyclic: vertex {culprit} lies on a cycle")
    return TopoOrder(rank)


def longest_path_ending_at(g: DiGraph) -> dict[int, int]:
    """Edge count of a longest directed path ending at each vertex.

    Dynamic programming over a topological order; the maximum over all
    vertices is the longest-path length of the whole DAG, which is also
    the optimal compacted drawing height.
    """
    order = topo_sort(g).order()
    value: dict[int, int] = {}
    for v in order:
        preds = g.predecessors(v)
        value[v] = max((value[u] + 1 for u in preds), default=0)
    return value
