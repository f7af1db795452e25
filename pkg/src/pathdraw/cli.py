"""Command-line front end: layout, gen, and bench subcommands.

Exit codes: 0 on success, 2 on input errors (bad files, bad flags,
invalid decompositions), 3 on internal invariant violations.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .bench import bench, median_wall_ms, rows_to_csv
from .decomposition import DecompositionError
from .generator import generate_random_dag
from .graph import GraphError, serialize_graph
from .metrics import count_vertex_touches
from .pipeline import ConfigError, InvariantError, PipelineConfig, StageError, run_pipeline_full
from .render import metrics_block, render_json, render_svg


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathdraw",
        description="Hierarchical graph drawing by path decomposition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_layout = sub.add_parser("layout", help="draw a graph from an edge-list file")
    p_layout.add_argument("input", help="edge-list file")
    group = p_layout.add_mutually_exclusive_group()
    group.add_argument("--paths", metavar="FILE", help="path-list file with the decomposition")
    group.add_argument(
        "--auto-cover",
        action="store_true",
        help="compute a minimum path cover (also the default with no --paths)",
    )
    p_layout.add_argument("--no-compact", action="store_true", help="keep topological rows")
    p_layout.add_argument(
        "--no-bundle-transitive", action="store_true", help="hide transitive edges"
    )
    p_layout.add_argument(
        "--no-bundle-cross", action="store_true", help="route cross edges individually"
    )
    p_layout.add_argument("--no-reorder", action="store_true", help="skip lane reordering")
    p_layout.add_argument("--svg", metavar="FILE", help="write an SVG drawing")
    p_layout.add_argument("--json", metavar="FILE", help="write the JSON layout document")
    p_layout.add_argument("--metrics", action="store_true", help="print the metrics block")
    p_layout.add_argument("--seed", type=int, default=None, help="seed recorded in metadata")
    p_layout.set_defaults(func=_cmd_layout)

    p_gen = sub.add_parser("gen", help="generate a random DAG edge-list file")
    p_gen.add_argument("--n", type=int, required=True, help="vertex count")
    p_gen.add_argument("--deg", type=float, required=True, help="edges per node")
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--out", required=True, metavar="FILE")
    p_gen.set_defaults(func=_cmd_gen)

    p_bench = sub.add_parser("bench", help="time the pipeline over generated graphs")
    p_bench.add_argument("--sizes", default="20,50,100", help="comma-separated vertex counts")
    p_bench.add_argument("--deg", type=float, default=1.6, help="edges per node")
    p_bench.add_argument("--seeds", type=int, default=2, help="seeds per size")
    p_bench.add_argument("--out", metavar="CSV", help="write rows as CSV")
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def _cmd_layout(args: argparse.Namespace) -> int:
    config = PipelineConfig(
        input_path=args.input,
        decomposition_path=args.paths,
        auto_cover=args.auto_cover,
        compact=not args.no_compact,
        bundle_transitive=not args.no_bundle_transitive,
        bundle_cross=not args.no_bundle_cross,
        reorder=not args.no_reorder,
        svg_path=args.svg,
        json_path=args.json,
        emit_metrics=args.metrics,
        seed=args.seed,
    )
    result = run_pipeline_full(config)
    if args.svg:
        Path(args.svg).write_text(render_svg(result.layout), encoding="utf-8")
    if args.json:
        Path(args.json).write_text(
            render_json(
                result.layout,
                result.metrics,
                bundles=result.drawing.bundles,
                bundle_of=result.drawing.bundle_of,
                seed=result.seed,
                toggles=result.toggles,
                version=__version__,
            ),
            encoding="utf-8",
        )
    if args.metrics:
        extra = {"vertex_touches": count_vertex_touches(result.layout)}
        sys.stdout.write(metrics_block(result.metrics, extra))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    g = generate_random_dag(args.n, args.deg, args.seed)
    Path(args.out).write_text(serialize_graph(g), encoding="utf-8")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(part) for part in args.sizes.split(",") if part]
    rows = bench(sizes, args.deg, args.seeds)
    csv_text = rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(csv_text, encoding="utf-8")
    else:
        sys.stdout.write(csv_text)
    for n, ms in median_wall_ms(rows).items():
        sys.stdout.write(f"median n={n}: {ms:.3f} ms\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        if isinstance(exc.cause, (GraphError, DecompositionError, ConfigError, OSError)):
            return 2
        return 3
    except (GraphError, DecompositionError, ConfigError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except InvariantError as exc:
        sys.stderr.write(f"internal invariant violated: {exc}\n")
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
