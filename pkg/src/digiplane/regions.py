"""Finite point sets, bounding boxes and component labeling over them.

Points are ``(x, y)`` integer tuples and point sets are ``frozenset``s of
them. The canonical order of points is the tuple order (x first, then y);
the canonical form of a set is the sorted tuple of its points.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import kernels

Point = tuple[int, int]
PointSet = frozenset


def canonical(points: Iterable[Point]) -> tuple[Point, ...]:
    return tuple(sorted(points))


def bbox(points: Iterable[Point]) -> tuple[int, int, int, int]:
    """``(x_min, x_max, y_min, y_max)`` of a nonempty point collection."""
    pts = list(points)
    if not pts:
        raise ValueError("bounding box of an empty set")
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return min(xs), max(xs), min(ys), max(ys)


def inflate(box: tuple[int, int, int, int], margin: int) -> tuple[int, int, int, int]:
    x0, x1, y0, y1 = box
    return x0 - margin, x1 + margin, y0 - margin, y1 + margin


def box_points(box: tuple[int, int, int, int]) -> list[Point]:
    x0, x1, y0, y1 = box
    return [(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)]


@dataclass(frozen=True)
class ComponentPartition:
    """Components of a finite region, in canonical order of their minimum point.

    ``outer_index`` names the component that touches the analysis window's
    border when the partition came from a windowed complement; such a
    component is only the window's slice of the unbounded component.
    """

    components: tuple[frozenset, ...]
    outer_index: int | None = None

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i: int) -> frozenset:
        return self.components[i]

    @property
    def outer(self) -> frozenset | None:
        if self.outer_index is None:
            return None
        return self.components[self.outer_index]

    @property
    def inner(self) -> tuple[frozenset, ...]:
        return tuple(c for i, c in enumerate(self.components) if i != self.outer_index)

    def component_of(self, p: Point) -> int | None:
        for i, comp in enumerate(self.components):
            if p in comp:
                return i
        return None


def _mask(points: Iterable[Point], box: tuple[int, int, int, int]) -> np.ndarray:
    x0, x1, y0, y1 = box
    mask = np.zeros((x1 - x0 + 1, y1 - y0 + 1), dtype=np.uint8)
    for x, y in points:
        mask[x - x0, y - y0] = 1
    return mask


def _collect(labels: np.ndarray, count: int, box: tuple[int, int, int, int]) -> list[list[Point]]:
    x0, _, y0, _ = box
    groups: list[list[Point]] = [[] for _ in range(count)]
    ii, jj = np.nonzero(labels >= 0)
    for i, j, lab in zip(ii.tolist(), jj.tolist(), labels[ii, jj].tolist()):
        groups[lab].append((i + x0, j + y0))
    return groups


def label_points(points: Iterable[Point], mode: int) -> ComponentPartition:
    """Components of a finite set; ``mode`` is 4, 8 or ``kernels.MODE_KHALIMSKY``."""
    pts = frozenset(points)
    if not pts:
        return ComponentPartition(())
    box = bbox(pts)
    labels, count = kernels.label_grid(_mask(pts, box), mode, (box[0] + box[2]) & 1)
    # row-major labeling visits points in canonical order, so label order is canonical
    return ComponentPartition(tuple(frozenset(g) for g in _collect(labels, count, box)))


def count_components(points: Iterable[Point], mode: int) -> int:
    pts = frozenset(points)
    if not pts:
        return 0
    box = bbox(pts)
    return kernels.label_grid(_mask(pts, box), mode, (box[0] + box[2]) & 1)[1]


def window_complement(curve: Iterable[Point], mode: int, box: tuple[int, int, int, int]) -> ComponentPartition:
    """Components of ``box \\ curve`` with every border-touching piece merged.

    The merged piece is flagged as ``outer_index``.
    """
    mask = np.ones((box[1] - box[0] + 1, box[3] - box[2] + 1), dtype=np.uint8)
    for x, y in curve:
        mask[x - box[0], y - box[2]] = 0
    labels, count = kernels.label_grid(mask, mode, (box[0] + box[2]) & 1)
    border = set(labels[0, :].tolist()) | set(labels[-1, :].tolist())
    border |= set(labels[:, 0].tolist()) | set(labels[:, -1].tolist())
    border.discard(-1)
    groups = _collect(labels, count, box)
    comps = [frozenset(g) for lab, g in enumerate(groups) if lab not in border]
    outer = frozenset(p for lab in border for p in groups[lab])
    if outer:
        comps.append(outer)
    comps.sort(key=min)
    outer_index = comps.index(outer) if outer else None
    return ComponentPartition(tuple(comps), outer_index)
