"""Compare the compiled and pure-Python kernel backends on fixed workloads.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json]

Each workload is timed on every importable backend; the best of N runs is
reported along with the speedup of the compiled kernel.
"""
from __future__ import annotations

import argparse
import json
import sys
import timeit

import numpy as np

from digiplane import kernels
from digiplane.grid import Adjacency
from digiplane.harness.generators import enumerate_closed_curves, enumerate_jordan_curves, enumerate_paths
from digiplane.harness.window import Window


def _mask(size: int, density: float, seed: int = 0) -> np.ndarray:
    return (np.random.default_rng(seed).random((size, size)) < density).astype(np.uint8)


def workloads() -> dict[str, callable]:
    mask = _mask(256, 0.55)
    return {
        "label 256x256, 4-adjacency": lambda: kernels.label_grid(mask, 4),
        "label 256x256, 8-adjacency": lambda: kernels.label_grid(mask, 8),
        "label 256x256, khalimsky": lambda: kernels.label_grid(mask, kernels.MODE_KHALIMSKY),
        "closed 8-curves, 6x6, <=11": lambda: sum(1 for _ in enumerate_closed_curves(
            Window.sized(6, 6), 11, Adjacency.EIGHT)),
        "4-paths, 6x6, <=10": lambda: sum(1 for _ in enumerate_paths(Window.sized(6, 6), 10, Adjacency.FOUR)),
        "jordan curves, 8x8, <=14": lambda: sum(1 for _ in enumerate_jordan_curves(Window.sized(8, 8), 14)),
    }


def run(repeat: int) -> list[dict]:
    results = []
    saved = kernels.backend
    try:
        for name, fn in workloads().items():
            row = {"workload": name}
            for label, module in kernels.available_backends().items():
                kernels.backend = module
                row[label] = min(timeit.repeat(fn, number=1, repeat=repeat))
            if "compiled" in row:
                row["speedup"] = row["python"] / row["compiled"]
            results.append(row)
    finally:
        kernels.backend = saved
    return results


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)
    results = run(args.repeat)
    if args.json:
        print(json.dumps(results, indent=2))
        return 0
    if "compiled" not in kernels.available_backends():
        print("compiled backend not built; timing the python backend only", file=sys.stderr)
    print(f"{'workload':32} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for row in results:
        compiled = f"{row['compiled']:.4f}" if "compiled" in row else "-"
        speedup = f"{row['speedup']:.1f}x" if "speedup" in row else "-"
        print(f"{row['workload']:32} {row['python']:10.4f} {compiled:>11} {speedup:>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
