"""Exhaustive and seeded-random generators of point sets inside a window.

Every enumerator yields ``frozenset``s, each exactly once, in canonical
order: ascending by the sorted tuple of their points.
"""
from __future__ import annotations

from typing import Iterator

import numpy as np

from .. import kernels
from ..grid import OFFSETS_4, OFFSETS_8, Adjacency
from ..khalimsky import adjacency
from .window import Window

RANDOM_SCHEME = "numpy-pcg64/cell-major/v1"


def _graph(w: Window, mode: int) -> tuple[list, np.ndarray, np.ndarray]:
    pts = w.points()
    index = {p: i for i, p in enumerate(pts)}
    indptr = [0]
    indices: list[int] = []
    for p in pts:
        if mode == kernels.MODE_KHALIMSKY:
            around = sorted(adjacency(p))
        else:
            offsets = OFFSETS_4 if mode == 4 else OFFSETS_8
            around = [(p[0] + dx, p[1] + dy) for dx, dy in offsets]
        indices.extend(index[q] for q in around if q in index)
        indptr.append(len(indices))
    return pts, np.asarray(indptr, dtype=np.int32), np.asarray(indices, dtype=np.int32)


def _canonical_rows(rows: np.ndarray) -> np.ndarray:
    if len(rows) == 0:
        return rows
    big = np.iinfo(np.int32).max
    srt = np.sort(np.where(rows < 0, big, rows), axis=1)
    srt[srt == big] = -1
    order = np.lexsort(srt.T[::-1])
    return srt[order]


def _emit(pts: list, rows: np.ndarray) -> Iterator[frozenset]:
    for row in _canonical_rows(rows).tolist():
        yield frozenset(pts[i] for i in row if i >= 0)


def _induced(w: Window, mode: int, min_size: int, max_size: int, closed: bool, cap: int | None) -> Iterator[frozenset]:
    w.check_cap(cap)
    if max_size < 1:
        return iter(())
    pts, indptr, indices = _graph(w, mode)
    rows = kernels.induced_paths(indptr, indices, min_size, max_size, closed)
    return _emit(pts, rows)


def enumerate_closed_curves(w: Window, max_size: int, k: Adjacency, min_size: int = 1,
                            cap: int | None = None) -> Iterator[frozenset]:
    """Every closed k-curve inside ``w`` with ``min_size <= size <= max_size``.

    Closed k-curves are exactly the induced cycles of the k-adjacency graph,
    found by backtracking with the degree-2 rule as the pruning test.
    """
    if max_size < 4:
        raise ValueError("max_size must be at least 4")
    return _induced(w, int(k), min_size, max_size, True, cap)


def enumerate_paths(w: Window, max_size: int, k: Adjacency, min_size: int = 2,
                    cap: int | None = None) -> Iterator[frozenset]:
    """Every k-path inside ``w`` (induced paths with at least two points)."""
    return _induced(w, int(k), max(min_size, 2), max_size, False, cap)


def enumerate_jordan_curves(w: Window, max_size: int, min_size: int = 4,
                            cap: int | None = None) -> Iterator[frozenset]:
    """Every Jordan curve of K^2 inside ``w``: induced cycles with at least four points."""
    return _induced(w, kernels.MODE_KHALIMSKY, max(min_size, 4), max_size, True, cap)


def enumerate_arcs(w: Window, max_size: int, min_size: int = 1, cap: int | None = None) -> Iterator[frozenset]:
    """Every arc of K^2 inside ``w``, single points included."""
    return _induced(w, kernels.MODE_KHALIMSKY, min_size, max_size, False, cap)


def random_grid_set(w: Window, density: float, seed: int) -> frozenset:
    """Each cell of ``w`` kept independently with probability ``density``.

    Cells are visited in canonical order and compared against consecutive
    draws of ``numpy.random.default_rng(seed).random``; this pairing is the
    versioned ``RANDOM_SCHEME``.
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    draws = np.random.default_rng(seed).random(w.area)
    return frozenset(p for p, r in zip(w.points(), draws.tolist()) if r < density)


def derive_seed(*parts: int) -> int:
    """Stable integer seed from a tuple of integers."""
    return int(np.random.SeedSequence([int(p) & 0xFFFFFFFF for p in parts]).generate_state(1)[0])
