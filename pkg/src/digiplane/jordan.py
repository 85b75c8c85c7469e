"""Complement decomposition of Jordan curves in K^2 through their Z^2 preimage.

For a Jordan curve ``J`` the preimage ``gamma_inv_set(J)`` is split into its
Rosenfeld complement components ``A`` and ``B``; each is carried back to K^2
as ``gamma_star(A) | bracket(A, J)``. Three kinds of curve are handled:

* ``PURE_ONLY`` -- no mixed points; preimage is a closed 4-curve, sides are
  8-components.
* ``GAMMA_STAR_FIXED`` -- ``gamma_star(gamma_inv_set(J)) == J``; preimage is a
  closed 8-curve, sides are 4-components.
* ``SJ_SINGLETON`` -- exactly one extra mixed point ``m`` appears, touching
  three curve points. The curve is first rewired through ``m`` (``j_m``),
  decomposed as above, and the sides are then patched.

Anything else is ``UNSUPPORTED`` and is never decomposed.

Everything unbounded is reported relative to the analysis window: the box
of ``J`` inflated by ``COMPLEMENT_MARGIN``.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Iterable

from .grid import COMPLEMENT_MARGIN, OFFSETS_8, Adjacency, Kind, classify_path, complement_components, neighbors
from .harness.report import Counterexample, VerificationReport
from .khalimsky import adjacency, classify_k, is_closed, is_mixed, is_open, is_pure
from .regions import Point, bbox, box_points, inflate, label_points
from .slant import gamma, gamma_inv, gamma_inv_set, gamma_star, gamma_star_fixed, pure_only

_AXIS = ((1, 0), (-1, 0), (0, 1), (0, -1))


class HypothesisError(ValueError):
    """A theorem-level operation was called outside its hypothesis."""


class DecompositionError(AssertionError):
    """The expanded sides fail to partition the complement (a counterexample)."""


class Regime(enum.Enum):
    PURE_ONLY = "pure-only"
    GAMMA_STAR_FIXED = "gamma-star-fixed"
    SJ_SINGLETON = "sj-singleton"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class JordanDecomposition:
    """Two complement sides of ``curve``.

    ``component_a`` is the bounded side, ``component_b`` the window slice of
    the unbounded one; ``a_side_grid``/``b_side_grid`` are the Z^2
    components they were built from (``b_side_grid`` is window-relative too).
    All four are empty for ``UNSUPPORTED``.
    """

    curve: frozenset
    regime: Regime
    component_a: frozenset
    component_b: frozenset
    a_side_grid: frozenset
    b_side_grid: frozenset
    window: tuple[int, int, int, int]

    @property
    def supported(self) -> bool:
        return self.regime is not Regime.UNSUPPORTED


def bracket(a: Iterable[Point], j: Iterable[Point]) -> frozenset:
    """``[A, J]``: mixed points whose whole adjacency lies in ``gamma(A) | J``."""
    target = frozenset(gamma(p) for p in a) | frozenset(j)
    found = set()
    for q in target:
        if not is_pure(q):
            continue
        u, v = q
        for du, dv in _AXIS:
            m = (u + du, v + dv)
            if m not in found and adjacency(m) <= target:
                found.add(m)
    return frozenset(found)


def expanded_side(a: Iterable[Point], j: Iterable[Point]) -> frozenset:
    """``gamma_star(A) | [A, J]``."""
    a = frozenset(a)
    return gamma_star(a) | bracket(a, j)


def s_j(j: Iterable[Point]) -> frozenset:
    """Mixed points of ``gamma_star(gamma_inv_set(J))`` meeting ``J`` in exactly three points."""
    curve = frozenset(j)
    return frozenset(
        m for m in gamma_star(gamma_inv_set(curve))
        if is_mixed(m) and len(adjacency(m) & curve) == 3
    )


def _surgery_points(curve: frozenset, m: Point) -> tuple[Point, Point, Point, Point]:
    """``(a, b, c, d)``: ``a, b`` the like-kind curve points around ``m``, ``c`` the odd one out, ``d`` off the curve."""
    touching = sorted(adjacency(m) & curve)
    if len(touching) != 3:
        raise HypothesisError(f"J_m hypothesis violated: {m} touches {len(touching)} curve points")
    opened = [p for p in touching if is_open(p)]
    closed = [p for p in touching if is_closed(p)]
    if len(opened) == 2 and len(closed) == 1:
        (a, b), c = opened, closed[0]
    elif len(closed) == 2 and len(opened) == 1:
        (a, b), c = closed, opened[0]
    else:
        raise HypothesisError("J_m hypothesis violated: parity condition fails")
    (d,) = adjacency(m) - curve
    return a, b, c, d


def j_m(j: Iterable[Point], m: Point) -> frozenset:
    """Swap ``m`` into the curve in place of the curve point of the odd kind.

    Raises ``HypothesisError`` when ``m`` is not in ``s_j(J)`` or the parity
    condition fails, and ``DecompositionError`` if the result is not a
    Jordan curve with ``s_j(result) <= s_j(J) - {m}``.
    """
    curve = frozenset(j)
    sj = s_j(curve)
    if m not in sj:
        raise HypothesisError(f"J_m hypothesis violated: {m} is not in S_J")
    _, _, c, _ = _surgery_points(curve, m)
    result = (curve - {c}) | {m}
    if classify_k(result).kind is not Kind.JORDAN_CURVE:
        raise DecompositionError(f"J_m is not a Jordan curve for m={m}")
    if not s_j(result) <= sj - {m}:
        raise DecompositionError(f"S_(J_m) not contained in S_J minus {m}")
    return result


def analysis_window(j: Iterable[Point]) -> tuple[int, int, int, int]:
    return inflate(bbox(j), COMPLEMENT_MARGIN)


def _grid_region(kbox: tuple[int, int, int, int]) -> tuple[frozenset, frozenset]:
    """Z^2 points whose image lies in ``kbox`` inflated by one, and the border band among them.

    The extra ring makes every adjacency of a ``kbox`` point visible.
    """
    region = frozenset(gamma_inv(q) for q in box_points(inflate(kbox, 1)) if is_pure(q))
    border = frozenset(p for p in region if any((p[0] + dx, p[1] + dy) not in region for dx, dy in OFFSETS_8))
    return region, border


def _split_grid(pre: frozenset, k: Adjacency, kbox) -> tuple[frozenset, frozenset]:
    region, border = _grid_region(kbox)
    parts = label_points(region - pre, int(k))
    inner = [c for c in parts if not (c & border)]
    outer = frozenset().union(*(c for c in parts if c & border))
    if len(inner) != 1:
        raise DecompositionError(f"preimage complement has {len(inner)} bounded {int(k)}-components, expected 1")
    return inner[0], outer


def _sides(curve: frozenset, k: Adjacency, kbox) -> tuple[frozenset, frozenset, frozenset, frozenset]:
    a, b = _split_grid(gamma_inv_set(curve), k, kbox)
    window = frozenset(box_points(kbox))
    return expanded_side(a, curve) & window, expanded_side(b, curve) & window, a, b


def select_regime(j: Iterable[Point]) -> Regime:
    curve = frozenset(j)
    if pure_only(curve):
        return Regime.PURE_ONLY
    closure = gamma_star(gamma_inv_set(curve))
    if closure == curve:
        return Regime.GAMMA_STAR_FIXED
    sj = s_j(curve)
    if len(sj) == 1 and closure == curve | sj:
        try:
            _surgery_points(curve, next(iter(sj)))
        except HypothesisError:
            return Regime.UNSUPPORTED
        return Regime.SJ_SINGLETON
    return Regime.UNSUPPORTED


def decompose(j: Iterable[Point]) -> JordanDecomposition:
    """Split the complement of a Jordan curve with more than four points into its two sides.

    Raises ``HypothesisError`` if ``J`` is not such a curve, and
    ``DecompositionError`` if the constructed sides do not partition the
    window complement.
    """
    curve = frozenset(j)
    if len(curve) <= 4 or classify_k(curve).kind is not Kind.JORDAN_CURVE:
        raise HypothesisError("hypothesis violated: need a Jordan curve with more than four points")
    kbox = analysis_window(curve)
    regime = select_regime(curve)
    if regime is Regime.UNSUPPORTED:
        empty = frozenset()
        return JordanDecomposition(curve, regime, empty, empty, empty, empty, kbox)

    if regime is Regime.PURE_ONLY:
        side_a, side_b, grid_a, grid_b = _sides(curve, Adjacency.EIGHT, kbox)
    elif regime is Regime.GAMMA_STAR_FIXED:
        side_a, side_b, grid_a, grid_b = _sides(curve, Adjacency.FOUR, kbox)
    else:
        (m,) = s_j(curve)
        _, _, c, d = _surgery_points(curve, m)
        rewired = j_m(curve, m)
        side_a, side_b, grid_a, grid_b = _sides(rewired, Adjacency.FOUR, kbox)
        # the side holding d absorbs m; c is back on the curve, so its side loses it
        if d in side_a:
            side_a, side_b = side_a | {m}, side_b - {c}
        elif d in side_b:
            side_a, side_b = side_a - {c}, side_b | {m}
        else:
            raise DecompositionError(f"{d} lies in neither side of J_m")

    complement = frozenset(box_points(kbox)) - curve
    if side_a & side_b or side_a | side_b != complement:
        raise DecompositionError(f"expanded sides do not partition the complement ({regime.value})")
    return JordanDecomposition(curve, regime, side_a, side_b, grid_a, grid_b, kbox)


def verify_rosenfeld_jordan(j: Iterable[Point], k: Adjacency) -> VerificationReport:
    """Check both conclusions of the Rosenfeld Jordan theorem for one closed k-curve."""
    start = time.perf_counter()
    curve = frozenset(j)
    k = Adjacency(k)
    report = VerificationReport(f"rosenfeld-jordan-{int(k)}", params={"k": int(k), "size": len(curve)})
    if len(curve) <= 4 or classify_path(curve, k).kind is not Kind.CLOSED_CURVE:
        report.excluded = 1
        report.notes.append("hypothesis not met: need a closed k-curve with more than 4 points")
        report.elapsed = time.perf_counter() - start
        return report
    report.cases_examined = 1
    failure = rosenfeld_jordan_failure(curve, k)
    if failure is not None:
        report.passed = False
        report.first_counterexample = Counterexample((int(k), tuple(sorted(curve))), {"J": curve}, *failure)
    else:
        parts = complement_components(curve, k.complement)
        inner, outer = len(parts.inner[0]), len(parts.outer)
        report.notes.append(f"inner component: {inner} point{'s' if inner != 1 else ''} (exact)")
        report.notes.append(f"outer component: {outer} points (window-relative)")
    report.elapsed = time.perf_counter() - start
    return report


def rosenfeld_jordan_failure(curve: frozenset, k: Adjacency) -> tuple[str, str] | None:
    """``None`` when both conclusions hold, else ``(expected, actual)``."""
    kp = Adjacency(k).complement
    parts = complement_components(curve, kp)
    if len(parts) != 2:
        return ("2 complement components", f"{len(parts)} component{'s' if len(parts) != 1 else ''}")
    for p in sorted(curve):
        around = neighbors(p, kp)
        for i, comp in enumerate(parts):
            if not around & comp:
                return (f"every curve point has a {int(kp)}-neighbour in each component",
                        f"{p} has none in component {i}")
    return None
