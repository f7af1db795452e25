"""Pipeline orchestration: input to finished drawing plus metrics.

Stages run in a fixed order -- parse or generate, cycle removal, topological
sort, decomposition (given or computed), drawing (placement, compaction,
bundling, routing, reorder), metrics. Any stage failure is re-raised with
the stage name attached. The wall-clock window that the benchmark reports
covers cycle removal, the topological sort, and the drawing stages; parsing,
the path-cover computation (part of the input in this framework), metrics,
and file emission stay outside the clock.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path

from .decomposition import (
    DecompositionError,
    PathDecomposition,
    min_path_cover,
    parse_decomposition,
)
from .drawing import Drawing, draw
from .generator import generate_random_dag
from .graph import DiGraph, GraphError, parse_graph, remove_cycles, topo_sort
from .layout import Layout, MetricsReport, assert_properties
from .metrics import measure


class ConfigError(Exception):
    """Contradictory or incomplete pipeline configuration."""


class InvariantError(Exception):
    """A drawing self-check failed; indicates an internal bug."""


class StageError(Exception):
    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"stage '{stage}': {cause}")
        self.stage = stage
        self.cause = cause


@dataclass
class PipelineConfig:
    input_path: str | None = None
    gen_n: int | None = None
    gen_degree: float | None = None
    seed: int | None = None
    decomposition_path: str | None = None
    auto_cover: bool = False
    compact: bool = True
    bundle_transitive: bool = True
    bundle_cross: bool = True
    reorder: bool = True
    svg_path: str | None = None
    json_path: str | None = None
    emit_metrics: bool = False

    def validate(self) -> None:
        file_source = self.input_path is not None
        gen_source = self.gen_n is not None or self.gen_degree is not None
        if file_source == gen_source:
            raise ConfigError("exactly one input source: a file or generator parameters")
        if gen_source and (self.gen_n is None or self.gen_degree is None):
            raise ConfigError("generator input needs both n and degree")
        if self.decomposition_path is not None and self.auto_cover:
            raise ConfigError("--paths and --auto-cover are mutually exclusive")


@dataclass
class PipelineResult:
    layout: Layout
    metrics: MetricsReport
    drawing: Drawing
    graph: DiGraph
    decomposition: PathDecomposition
    draw_ms: float
    toggles: dict[str, bool] = field(default_factory=dict)
    seed: int | None = None


def _stage(name: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (GraphError, DecompositionError, ConfigError, OSError) as exc:
        raise StageError(name, exc) from exc


def run_pipeline_full(config: PipelineConfig) -> PipelineResult:
    """Execute every enabled stage and keep the rich intermediate results."""
    _stage("config", config.validate)
    if config.input_path is not None:
        text = _stage("read", Path(config.input_path).read_text)
        g = _stage("parse", parse_graph, text)
    else:
        g = _stage(
            "generate",
            generate_random_dag,
            config.gen_n,
            config.gen_degree,
            config.seed if config.seed is not None else 0,
        )

    t0 = time.perf_counter()
    removal = _stage("cycle-removal", remove_cycles, g)
    dag = removal.dag
    order = _stage("topo-sort", topo_sort, dag)
    timed = time.perf_counter() - t0

    if config.decomposition_path is not None:
        text = _stage("read-paths", Path(config.decomposition_path).read_text)
        d = _stage("decomposition", parse_decomposition, text, dag)
    else:
        d = _stage("decomposition", min_path_cover, dag)

    t1 = time.perf_counter()
    drawing = _stage(
        "draw",
        draw,
        dag,
        d,
        order,
        compact_rows=config.compact,
        bundle_transitive_edges=config.bundle_transitive,
        bundle_cross_incoming=config.bundle_cross,
        reorder=config.reorder,
    )
    timed += time.perf_counter() - t1

    if config.compact:
        violation = assert_properties(dag, drawing.layout)
        if violation is not None:
            raise InvariantError(str(violation))

    metrics = _stage("metrics", measure, drawing.layout)
    toggles = {
        "compact": config.compact,
        "bundle_transitive": config.bundle_transitive,
        "bundle_cross": config.bundle_cross,
        "reorder": config.reorder,
    }
    return PipelineResult(
        layout=drawing.layout,
        metrics=metrics,
        drawing=drawing,
        graph=dag,
        decomposition=d,
        draw_ms=timed * 1000.0,
        toggles=toggles,
        seed=config.seed,
    )


def run_pipeline(config: PipelineConfig) -> tuple[Layout, MetricsReport]:
    """Run the pipeline and return the finished layout with its metrics."""
    result = run_pipeline_full(config)
    return result.layout, result.metrics
