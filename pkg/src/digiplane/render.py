"""ASCII and SVG pictures of point sets.

ASCII legend (rows run top to bottom with y decreasing):

    .   empty position
    #   point of a Z2 set, or a mixed point of a K2 set
    o   pure point of a K2 set
    1-9 point of overlay n only
    *   point shared by the base set and an overlay

SVG draws pure points (and all Z2 points) as circles and mixed points as
squares; ``edges=True`` adds a segment per adjacent pair. Output is
deterministic: elements are emitted in sorted order with fixed formatting.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from . import khalimsky as kh
from .grid import Adjacency, are_adjacent
from .pts import Plane
from .regions import Point, bbox, canonical

SCALE = 24
RADIUS = 6
PALETTE = ("#1f4e79", "#c0392b", "#27ae60", "#8e44ad", "#d35400", "#16a085", "#7f8c8d", "#b7950b", "#2c3e50")


def _layers(base: frozenset, overlays: Sequence[frozenset]) -> tuple[int, int, int, int] | None:
    every = set(base).union(*overlays) if overlays else set(base)
    return bbox(every) if every else None


def ascii_art(plane: Plane, points: Iterable[Point], overlays: Sequence[Iterable[Point]] = ()) -> str:
    base = frozenset(points)
    layers = [frozenset(o) for o in overlays]
    if len(layers) > 9:
        raise ValueError("at most 9 overlays")
    box = _layers(base, layers)
    if box is None:
        return "(empty)\n"
    x0, x1, y0, y1 = box
    rows = []
    for y in range(y1, y0 - 1, -1):
        cells = []
        for x in range(x0, x1 + 1):
            p = (x, y)
            hits = [i for i, layer in enumerate(layers) if p in layer]
            if p in base:
                glyph = "*" if hits else ("o" if plane is Plane.K2 and kh.is_pure(p) else "#")
            elif hits:
                glyph = str(hits[0] + 1)
            else:
                glyph = "."
            cells.append(glyph)
        rows.append(" ".join(cells))
    rows.append(f"x {x0}..{x1}, y {y0}..{y1}")
    return "\n".join(rows) + "\n"


def _edges(plane: Plane, s: frozenset, k: Adjacency) -> list[tuple[Point, Point]]:
    pts = canonical(s)
    if plane is Plane.K2:
        return [(p, q) for i, p in enumerate(pts) for q in pts[i + 1:] if kh.are_adjacent(p, q)]
    return [(p, q) for i, p in enumerate(pts) for q in pts[i + 1:] if are_adjacent(p, q, k)]


def svg(plane: Plane, points: Iterable[Point], overlays: Sequence[Iterable[Point]] = (), *,
        edges: bool = False, adjacency: Adjacency = Adjacency.EIGHT) -> str:
    base = frozenset(points)
    layers = [frozenset(o) for o in overlays]
    box = _layers(base, layers) or (0, 0, 0, 0)
    x0, x1, y0, y1 = box
    width = (x1 - x0 + 2) * SCALE
    height = (y1 - y0 + 2) * SCALE

    def at(p: Point) -> tuple[int, int]:
        return (p[0] - x0 + 1) * SCALE, (y1 - p[1] + 1) * SCALE

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect class="background" x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for n, layer in enumerate([base] + layers):
        colour = PALETTE[n % len(PALETTE)]
        out.append(f'<g class="layer" id="layer{n}" stroke="{colour}" fill="{colour}">')
        if edges:
            for p, q in _edges(plane, layer, adjacency):
                (ax, ay), (bx, by) = at(p), at(q)
                out.append(f'<line class="edge" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke-width="2"/>')
        for p in canonical(layer):
            cx, cy = at(p)
            if plane is Plane.K2 and kh.is_mixed(p):
                out.append(f'<rect class="node mixed" x="{cx - RADIUS}" y="{cy - RADIUS}" '
                           f'width="{2 * RADIUS}" height="{2 * RADIUS}"><title>{p[0]},{p[1]}</title></rect>')
            else:
                kind = "node pure" if plane is Plane.K2 else "node"
                out.append(f'<circle class="{kind}" cx="{cx}" cy="{cy}" r="{RADIUS}">'
                           f'<title>{p[0]},{p[1]}</title></circle>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
