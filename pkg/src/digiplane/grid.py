"""The Rosenfeld plane: Z^2 with 4- and 8-adjacency."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .regions import ComponentPartition, Point, bbox, count_components, inflate, label_points, window_complement

COMPLEMENT_MARGIN = 2


class Adjacency(enum.IntEnum):
    FOUR = 4
    EIGHT = 8

    @property
    def complement(self) -> "Adjacency":
        return Adjacency.EIGHT if self is Adjacency.FOUR else Adjacency.FOUR

    @classmethod
    def parse(cls, value: "int | str | Adjacency") -> "Adjacency":
        return cls(int(value))


OFFSETS_4 = ((1, 0), (-1, 0), (0, 1), (0, -1))
OFFSETS_8 = OFFSETS_4 + ((1, 1), (1, -1), (-1, 1), (-1, -1))

# p1..p8 around p: p1 upper-left, then clockwise (y grows upward)
RING_LABELS = {
    1: (-1, 1), 2: (0, 1), 3: (1, 1), 4: (1, 0),
    5: (1, -1), 6: (0, -1), 7: (-1, -1), 8: (-1, 0),
}


def ring_point(p: Point, i: int) -> Point:
    """The neighbour ``p_i`` of ``p``; ``i`` is taken cyclically in 1..8."""
    dx, dy = RING_LABELS[(i - 1) % 8 + 1]
    return (p[0] + dx, p[1] + dy)


def _offsets(k: Adjacency) -> tuple[tuple[int, int], ...]:
    return OFFSETS_4 if k == Adjacency.FOUR else OFFSETS_8


def neighbors(p: Point, k: Adjacency) -> frozenset:
    x, y = p
    return frozenset((x + dx, y + dy) for dx, dy in _offsets(k))


def are_adjacent(p: Point, q: Point, k: Adjacency) -> bool:
    dx, dy = abs(p[0] - q[0]), abs(p[1] - q[1])
    if k == Adjacency.FOUR:
        return dx + dy == 1
    return max(dx, dy) == 1


def sets_adjacent(a: Iterable[Point], b: Iterable[Point], k: Adjacency) -> bool:
    """True when some point of ``a`` is k-adjacent to some point of ``b``."""
    bs = frozenset(b)
    return any(q in bs for p in a for q in neighbors(p, k))


def degree(p: Point, s: frozenset, k: Adjacency) -> int:
    x, y = p
    return sum((x + dx, y + dy) in s for dx, dy in _offsets(k))


def components(s: Iterable[Point], k: Adjacency) -> ComponentPartition:
    return label_points(s, int(k))


def is_k_connected(s: Iterable[Point], k: Adjacency) -> bool:
    return count_components(s, int(k)) <= 1


class Kind(enum.Enum):
    PATH = "path"
    CLOSED_CURVE = "closed-curve"
    ARC = "arc"
    JORDAN_CURVE = "jordan-curve"
    NEITHER = "neither"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    endpoints: tuple[Point, Point] | None = None

    def __bool__(self) -> bool:
        return self.kind is not Kind.NEITHER


NEITHER = Classification(Kind.NEITHER)


def classify_path(c: Iterable[Point], k: Adjacency) -> Classification:
    """Tell a k-path from a closed k-curve from anything else.

    Connectivity is required on top of the degree profile, so two disjoint
    cycles are ``NEITHER``.
    """
    s = frozenset(c)
    if not s:
        return NEITHER
    ends = []
    for p in s:
        d = degree(p, s, k)
        if d == 1:
            ends.append(p)
        elif d != 2:
            return NEITHER
    if len(ends) not in (0, 2) or not is_k_connected(s, k):
        return NEITHER
    if ends:
        return Classification(Kind.PATH, tuple(sorted(ends)))
    return Classification(Kind.CLOSED_CURVE)


def complement_components(j: Iterable[Point], k: Adjacency, margin: int = COMPLEMENT_MARGIN) -> ComponentPartition:
    """k-components of ``Z^2 \\ J`` seen through the box of ``J`` inflated by ``margin``.

    Inner components are exact. Border-touching pieces are merged into the
    window slice of the unbounded component (``outer_index``).
    """
    curve = frozenset(j)
    if not curve:
        raise ValueError("empty curve")
    return window_complement(curve, int(k), inflate(bbox(curve), margin))
