#!/usr/bin/env python3
"""Walkthrough: the benchmark harness and the drawing-time trend.

Times the drawing pipeline over generated graphs at growing sizes and
prints the per-graph rows plus the median per size. The timed window is
cycle removal + topological sort + drawing; generation, the path cover,
and metric computation are excluded, so doubling the graph should roughly
double the time.
"""

from pathdraw import bench, median_wall_ms, rows_to_csv

rows = bench(sizes=[20, 50, 100, 200, 400], degree=1.6, seeds=3)
print(rows_to_csv(rows), end="")

print("\nmedian drawing time per size:")
medians = median_wall_ms(rows)
for n, ms in medians.items():
    print(f"  n={n:4d}: {ms:8.3f} ms")

sizes = sorted(medians)
print("\ngrowth per size step:")
for a, b in zip(sizes, sizes[1:]):
    print(f"  {a:4d} -> {b:4d}: {medians[b] / medians[a]:.2f}x")
