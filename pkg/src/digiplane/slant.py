"""The slant map between Z^2 and K^2, its inverse on sets, and the expansion operator.

``gamma`` sends ``(x, y)`` to ``(x + y, y - x)``: an injection of Z^2 onto the
pure points of K^2 that turns 4-adjacency into Khalimsky adjacency.
``gamma_star`` additionally fills in every mixed point whose minimal
neighbourhood or closure (minus the point itself) is already in the image.
"""
from __future__ import annotations

from typing import Iterable

from .khalimsky import cl_point, is_mixed, is_pure, n_min
from .regions import Point

_AXIS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def gamma(p: Point) -> Point:
    x, y = p
    return (x + y, y - x)


def gamma_inv(q: Point) -> Point:
    u, v = q
    if (u - v) % 2:
        raise ValueError(f"not in range of Γ: {q} is mixed")
    return ((u - v) // 2, (u + v) // 2)


def gamma_set(a: Iterable[Point]) -> frozenset:
    return frozenset(gamma(p) for p in a)


def gamma_inv_set(b: Iterable[Point]) -> frozenset:
    """Preimage under gamma; mixed points have none and are dropped."""
    return frozenset(gamma_inv(q) for q in b if is_pure(q))


def expansion_points(image: frozenset) -> frozenset:
    """Mixed points ``m`` with ``N(m)`` or ``cl(m)`` inside ``image | {m}``."""
    found = set()
    for u, v in image:
        for du, dv in _AXIS:
            m = (u + du, v + dv)
            if m in found:
                continue
            if n_min(m) - {m} <= image or cl_point(m) - {m} <= image:
                found.add(m)
    return frozenset(found)


def gamma_star(a: Iterable[Point]) -> frozenset:
    image = gamma_set(a)
    return image | expansion_points(image)


def gamma_star_fixed(j: Iterable[Point]) -> bool:
    curve = frozenset(j)
    return gamma_star(gamma_inv_set(curve)) == curve


def gamma_box(box: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """Bounding box in K^2 of the gamma image of a Z^2 box."""
    x0, x1, y0, y1 = box
    return x0 + y0, x1 + y1, y0 - x1, y1 - x0


def pure_only(s: Iterable[Point]) -> bool:
    return not any(is_mixed(p) for p in s)
