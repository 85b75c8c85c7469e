"""The Khalimsky plane K^2: the digital line squared, with the product topology."""
from __future__ import annotations

from typing import Iterable

from . import kernels
from .grid import COMPLEMENT_MARGIN, NEITHER, Classification, Kind
from .regions import ComponentPartition, Point, bbox, count_components, inflate, label_points, window_complement

_AXIS = ((1, 0), (-1, 0), (0, 1), (0, -1))
_DIAG = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def is_pure(p: Point) -> bool:
    return (p[0] - p[1]) % 2 == 0


def is_mixed(p: Point) -> bool:
    return (p[0] - p[1]) % 2 != 0


def is_open(p: Point) -> bool:
    return p[0] % 2 == 1 and p[1] % 2 == 1


def is_closed(p: Point) -> bool:
    return p[0] % 2 == 0 and p[1] % 2 == 0


def purity(p: Point) -> str:
    return "pure" if is_pure(p) else "mixed"


def n_line(n: int) -> frozenset:
    """Minimal open neighbourhood of ``n`` in the digital line."""
    if n % 2:
        return frozenset((n,))
    return frozenset((n - 1, n, n + 1))


def cl_line(n: int) -> frozenset:
    """Closure of ``{n}`` in the digital line."""
    if n % 2:
        return frozenset((n - 1, n, n + 1))
    return frozenset((n,))


def n_min(p: Point) -> frozenset:
    return frozenset((a, b) for a in n_line(p[0]) for b in n_line(p[1]))


def cl_point(p: Point) -> frozenset:
    return frozenset((a, b) for a in cl_line(p[0]) for b in cl_line(p[1]))


def adjacency(p: Point) -> frozenset:
    """A(p): the 8 surrounding points when ``p`` is pure, the 4 axis ones when mixed."""
    x, y = p
    offsets = _AXIS + _DIAG if is_pure(p) else _AXIS
    return frozenset((x + dx, y + dy) for dx, dy in offsets)


def are_adjacent(p: Point, q: Point) -> bool:
    dx, dy = abs(p[0] - q[0]), abs(p[1] - q[1])
    if dx + dy == 1:
        return True
    return dx == 1 and dy == 1 and is_pure(p)


def degree(p: Point, s: frozenset) -> int:
    x, y = p
    d = sum((x + dx, y + dy) in s for dx, dy in _AXIS)
    if is_pure(p):
        d += sum((x + dx, y + dy) in s for dx, dy in _DIAG)
    return d


def shared_mixed(a: Point, b: Point) -> frozenset:
    """Mixed points whose adjacency contains both pure points ``a`` and ``b``."""
    if not (is_pure(a) and is_pure(b)):
        raise ValueError("pure points required")
    if a == b:
        raise ValueError("distinct points required")
    # a mixed m with a in A(m) is one of the four axis neighbours of a
    return frozenset(m for m in adjacency(a) if is_mixed(m) and b in adjacency(m))


def k_components(s: Iterable[Point]) -> ComponentPartition:
    return label_points(s, kernels.MODE_KHALIMSKY)


def is_connected(s: Iterable[Point]) -> bool:
    return count_components(s, kernels.MODE_KHALIMSKY) <= 1


def sets_adjacent(a: Iterable[Point], b: Iterable[Point]) -> bool:
    bs = frozenset(b)
    return any(q in bs for p in a for q in adjacency(p))


def classify_k(s: Iterable[Point]) -> Classification:
    """Arc, Jordan curve, or neither, from the degree profile plus connectivity.

    One point, or two adjacent points, count as (degenerate) arcs.
    """
    pts = frozenset(s)
    if not pts or not is_connected(pts):
        return NEITHER
    if len(pts) == 1:
        (p,) = pts
        return Classification(Kind.ARC, (p, p))
    ends = []
    for p in pts:
        d = degree(p, pts)
        if d == 1:
            ends.append(p)
        elif d != 2:
            return NEITHER
    if len(ends) == 2:
        return Classification(Kind.ARC, tuple(sorted(ends)))
    if not ends and len(pts) >= 4:
        return Classification(Kind.JORDAN_CURVE)
    return NEITHER


def complement_components_k(j: Iterable[Point], margin: int = COMPLEMENT_MARGIN) -> ComponentPartition:
    curve = frozenset(j)
    if not curve:
        raise ValueError("empty curve")
    return window_complement(curve, kernels.MODE_KHALIMSKY, inflate(bbox(curve), margin))
