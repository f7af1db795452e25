"""Benchmark harness: generated graphs through the pipeline, timed rows.

Each row records one graph's size, quality metrics, and the drawing wall
time in milliseconds (cycle removal + topological sort + drawing; parsing,
path-cover computation, metrics, and emission are not timed). Medians over
seeds damp scheduler noise.
"""

from __future__ import annotations

from dataclasses import dataclass
from statistics import median

from .pipeline import PipelineConfig, run_pipeline_full

CSV_FIELDS = (
    "graph_id",
    "n",
    "m",
    "crossings",
    "bends",
    "width",
    "height",
    "area",
    "wall_ms",
)


@dataclass(frozen=True)
class BenchRow:
    graph_id: str
    n: int
    m: int
    crossings: int
    bends: int
    width: int
    height: int
    area: int
    wall_ms: float


def bench(sizes, degree: float, seeds: int) -> list[BenchRow]:
    """Run the pipeline over a generated suite; rows follow suite order."""
    rows: list[BenchRow] = []
    for n in sizes:
        for s in range(1, seeds + 1):
            config = PipelineConfig(gen_n=n, gen_degree=degree, seed=s)
            result = run_pipeline_full(config)
            rows.append(
                BenchRow(
                    graph_id=f"n{n}-d{degree}-s{s}",
                    n=n,
                    m=result.graph.edge_count,
                    crossings=result.metrics.crossings,
                    bends=result.metrics.bends,
                    width=result.metrics.width,
                    height=result.metrics.height,
                    area=result.metrics.area,
                    wall_ms=round(result.draw_ms, 3),
                )
            )
    return rows


def median_wall_ms(rows: list[BenchRow]) -> dict[int, float]:
    """Median drawing time per graph size."""
    by_n: dict[int, list[float]] = {}
    for row in rows:
        by_n.setdefault(row.n, []).append(row.wall_ms)
    return {n: median(times) for n, times in sorted(by_n.items())}


def rows_to_csv(rows: list[BenchRow]) -> str:
    lines = [",".join(CSV_FIELDS)]
    for r in rows:
        lines.append(
            f"{r.graph_id},{r.n},{r.m},{r.crossings},{r.bends},"
            f"{r.width},{r.height},{r.area},{r.wall_ms}"
        )
    return "\n".join(lines) + "\n"
