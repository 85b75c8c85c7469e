"""Theorem suites: a generator of cases plus a check per statement.

A check returns ``None`` when the case passes, ``EXCLUDED`` when the case
falls outside the statement's hypothesis, and ``(expected, actual)`` on a
counterexample. Reports keep the canonically smallest counterexample, so
the outcome does not depend on evaluation order.
"""
from __future__ import annotations

import functools
import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Iterator

from .. import grid, khalimsky as kh
from ..grid import Adjacency, Kind, classify_path, is_k_connected
from ..jordan import (
    DecompositionError, HypothesisError, Regime, analysis_window, bracket, decompose, expanded_side, j_m,
    rosenfeld_jordan_failure, s_j,
)
from ..regions import box_points, canonical
from ..slant import gamma, gamma_box, gamma_inv, gamma_inv_set, gamma_set, gamma_star, pure_only
from .generators import (
    derive_seed, enumerate_arcs, enumerate_closed_curves, enumerate_jordan_curves, enumerate_paths, random_grid_set,
)
from .report import Counterexample, VerificationReport
from .window import Window

EXCLUDED = "excluded"


class Observed(str):
    """A passing outcome that also carries a tag; tags are tallied into the report notes."""


@dataclass(frozen=True)
class SuiteParams:
    window: Window = field(default_factory=lambda: Window.sized(7, 7))
    max_size: int = 12
    arc_max_size: int | None = None
    seed: int = 0
    samples: int = 100
    densities: tuple[float, ...] = (0.2, 0.4, 0.6)
    hypothesis_filter: bool = True
    cap: int | None = None
    jobs: int = 1

    def to_json(self) -> dict[str, Any]:
        d = asdict(self)
        d["window"] = self.window.to_json()
        d["densities"] = list(self.densities)
        return d


@dataclass(frozen=True)
class Case:
    key: tuple
    inputs: dict[str, Any]


@dataclass(frozen=True)
class Suite:
    name: str
    statement: str
    cases: Callable[[SuiteParams], Iterable[Case]]
    check: Callable[[Case, SuiteParams], Any]
    informational: bool = False
    needs_witness: bool = False


REGISTRY: dict[str, Suite] = {}


def suite(name: str, statement: str, cases: Callable[[SuiteParams], Iterable[Case]], *,
          informational: bool = False, needs_witness: bool = False):
    def register(check):
        REGISTRY[name] = Suite(name, statement, cases, check, informational, needs_witness)
        return check
    return register


class UnknownSuiteError(KeyError):
    def __str__(self) -> str:
        return f"unknown suite {self.args[0]!r}; registered: {', '.join(sorted(REGISTRY))}"


# -- case sources -------------------------------------------------------------

def _key(*sets: Iterable) -> tuple:
    return tuple(canonical(s) for s in sets)


def _closed_curves(params: SuiteParams, k: Adjacency) -> Iterator[frozenset]:
    return enumerate_closed_curves(params.window, params.max_size, k, cap=params.cap)


def _jordan_curves(params: SuiteParams) -> Iterator[Case]:
    for j in enumerate_jordan_curves(params.window, params.max_size, cap=params.cap):
        yield Case(_key(j), {"J": j})


def _random_sets(params: SuiteParams, window: Window | None = None) -> Iterator[tuple[int, int, frozenset]]:
    w = params.window if window is None else window
    for d, density in enumerate(params.densities):
        for i in range(params.samples):
            yield d, i, random_grid_set(w, density, derive_seed(params.seed, d, i))


def _random_grid_cases(params: SuiteParams) -> Iterator[Case]:
    params.window.check_cap(params.cap)
    for d, i, a in _random_sets(params):
        yield Case((d, i), {"A": a, "density": params.densities[d]})


def _complement_region(j: frozenset) -> frozenset:
    """Z^2 points of the analysis window of ``J`` off its preimage."""
    pre = gamma_inv_set(j)
    return frozenset(gamma_inv(q) for q in box_points(analysis_window(j)) if kh.is_pure(q)) - pre


def _sample_subsets(region: frozenset, seed: int, density: float = 0.5) -> frozenset:
    import numpy as np

    pts = sorted(region)
    draws = np.random.default_rng(seed).random(len(pts)).tolist()
    return frozenset(p for p, r in zip(pts, draws) if r < density)


# -- Rosenfeld plane ----------------------------------------------------------

def _rosenfeld_cases(params: SuiteParams) -> Iterator[Case]:
    for k in (Adjacency.FOUR, Adjacency.EIGHT):
        for j in _closed_curves(params, k):
            yield Case((int(k),) + _key(j), {"J": j, "k": int(k)})


@suite("jordan-rosenfeld", "closed k-curves with more than 4 points split Z^2 into two k'-components, "
       "each curve point touching both", _rosenfeld_cases)
def _check_rosenfeld(case: Case, params: SuiteParams):
    j, k = case.inputs["J"], Adjacency(case.inputs["k"])
    if params.hypothesis_filter and len(j) <= 4:
        return EXCLUDED
    return rosenfeld_jordan_failure(j, k)


def _closed8_cases(params: SuiteParams) -> Iterator[Case]:
    for j in _closed_curves(params, Adjacency.EIGHT):
        yield Case(_key(j), {"C": j})


@suite("different-components", "around a diagonal step p, p_i of a closed 8-curve, p_(i-1) and p_(i+1) "
       "lie in different 4-components of the complement", _closed8_cases)
def _check_different_components(case: Case, params: SuiteParams):
    c = case.inputs["C"]
    if len(c) <= 4:
        return EXCLUDED
    parts = grid.complement_components(c, Adjacency.FOUR)
    for p in sorted(c):
        for i in (1, 3, 5, 7):
            if grid.ring_point(p, i) not in c:
                continue
            before, after = grid.ring_point(p, i - 1), grid.ring_point(p, i + 1)
            ca, cb = parts.component_of(before), parts.component_of(after)
            if ca is None or cb is None or ca == cb:
                return (f"p_{(i - 2) % 8 + 1} and p_{i % 8 + 1} of {p} in different 4-components",
                        f"components {ca} and {cb}")
    return None


# -- Khalimsky plane and the slant map -----------------------------------------

def _pure_pairs(params: SuiteParams) -> Iterator[Case]:
    params.window.check_cap(params.cap)
    pts = [p for p in params.window.points() if kh.is_pure(p)]
    for a, b in itertools.combinations(pts, 2):
        yield Case((a, b), {"a": a, "b": b})


@suite("mixed-pair", "pure a, b share exactly two adjacent mixed points iff they are adjacent", _pure_pairs)
def _check_mixed_pair(case: Case, params: SuiteParams):
    a, b = case.inputs["a"], case.inputs["b"]
    shared = len(kh.shared_mixed(a, b))
    adjacent = b in kh.adjacency(a)
    if (shared == 2) != adjacent:
        return (f"shared==2 iff adjacent (adjacent={adjacent})", f"{shared} shared mixed points")
    return None


def _grid_pairs(params: SuiteParams) -> Iterator[Case]:
    params.window.check_cap(params.cap)
    for a, b in itertools.combinations(params.window.points(), 2):
        yield Case((a, b), {"a": a, "b": b})


@suite("slant-adjacency", "4-adjacency is carried to Khalimsky adjacency by gamma; diagonal steps to a "
       "unique shared mixed point", _grid_pairs)
def _check_slant_adjacency(case: Case, params: SuiteParams):
    a, b = case.inputs["a"], case.inputs["b"]
    ga, gb = gamma(a), gamma(b)
    four = grid.are_adjacent(a, b, Adjacency.FOUR)
    if four != (gb in kh.adjacency(ga)):
        return (f"gamma(b) in A(gamma(a)) iff 4-adjacent ({four})", f"{gb in kh.adjacency(ga)}")
    diagonal = grid.are_adjacent(a, b, Adjacency.EIGHT) and not four
    shared = len(kh.shared_mixed(ga, gb))
    if diagonal != (shared == 1):
        return (f"unique shared mixed point iff 8- but not 4-adjacent ({diagonal})", f"{shared} shared")
    return None


def _four_point_cases(params: SuiteParams) -> Iterator[Case]:
    for j in enumerate_jordan_curves(params.window, 4, cap=params.cap):
        yield Case(_key(j), {"J": j})


@suite("four-point-curves", "every 4-point Jordan curve in the window is A(m) for a mixed m", _four_point_cases)
def _check_four_point(case: Case, params: SuiteParams):
    j = case.inputs["J"]
    xs = sorted({p[0] for p in j})
    ys = sorted({p[1] for p in j})
    centre = (xs[len(xs) // 2], ys[len(ys) // 2])
    if not (kh.is_mixed(centre) and kh.adjacency(centre) == j):
        return ("A(m) for some mixed m", f"{canonical(j)}")
    return None


# -- arcs, paths and the expansion operator -------------------------------------

def _k2_window(params: SuiteParams) -> Window:
    """The K^2 box covering gamma of the grid window; its cap follows from the grid window's."""
    params.window.check_cap(params.cap)
    return Window.from_box(gamma_box(params.window.box))


def _k2_size(params: SuiteParams) -> int:
    return params.arc_max_size or params.max_size + 1


def _arc_gamma_star_cases(params: SuiteParams) -> Iterator[Case]:
    for c in enumerate_paths(params.window, params.max_size, Adjacency.EIGHT, cap=params.cap):
        yield Case((0,) + _key(c), {"C": c, "direction": "path=>arc"})
    kw = _k2_window(params)
    for arc in enumerate_arcs(kw, _k2_size(params), min_size=2, cap=kw.area):
        yield Case((1,) + _key(arc), {"D": arc, "direction": "arc=>path"})


def _pure_ends(arc: frozenset) -> tuple | None:
    cls = kh.classify_k(arc)
    if cls.kind is not Kind.ARC or len(arc) < 2:
        return None
    if all(kh.is_pure(e) for e in cls.endpoints):
        return cls.endpoints
    return None


@suite("arc-gamma-star", "8-paths map to arcs with pure endpoints; an arc D with pure endpoints has an 8-path "
       "preimage iff gamma_star restores D", _arc_gamma_star_cases)
def _check_arc_gamma_star(case: Case, params: SuiteParams):
    if case.inputs["direction"] == "path=>arc":
        image = gamma_star(case.inputs["C"])
        if _pure_ends(image) is None:
            return ("arc with pure endpoints", f"{kh.classify_k(image)}")
        return None
    d = case.inputs["D"]
    if _pure_ends(d) is None:
        return EXCLUDED
    pre = gamma_inv_set(d)
    is_path = classify_path(pre, Adjacency.EIGHT).kind is Kind.PATH
    restored = gamma_star(pre) == d
    if is_path != restored:
        return (f"gamma_inv(D) 8-path ({is_path}) iff gamma_star(gamma_inv(D)) == D", f"restored={restored}")
    return None


def _arc_cases(params: SuiteParams) -> Iterator[Case]:
    for arc in enumerate_arcs(params.window, params.max_size, min_size=2, cap=params.cap):
        yield Case(_key(arc), {"C": arc})


@suite("path-pullback", "for arcs with pure endpoints, the preimage is an 8-path iff gamma_star restores the arc; "
       "pure ends become 8-endpoints; with mixed ends the trimmed arc is restored", _arc_cases)
def _check_path_pullback(case: Case, params: SuiteParams):
    c = case.inputs["C"]
    cls = kh.classify_k(c)
    pre = gamma_inv_set(c)
    pre_cls = classify_path(pre, Adjacency.EIGHT)
    is_path = pre_cls.kind is Kind.PATH
    z, w = cls.endpoints
    if kh.is_pure(z) and kh.is_pure(w):
        restored = gamma_star(pre) == c
        if is_path != restored:
            return (f"8-path ({is_path}) iff gamma_star(gamma_inv(C)) == C", f"restored={restored}")
        if is_path and set(pre_cls.endpoints) != {gamma_inv(z), gamma_inv(w)}:
            return ("gamma_inv of the arc ends are the 8-endpoints", f"8-endpoints {pre_cls.endpoints}")
        return None
    if kh.is_mixed(z) and kh.is_mixed(w):
        if not is_path:
            return EXCLUDED
        trimmed = c - {z, w}
        if gamma_star(gamma_inv_set(trimmed)) != trimmed:
            return ("gamma_star(gamma_inv(C - ends)) == C - ends", "differs")
        return None
    return EXCLUDED


@suite("pure-arc-pullback", "an arc of pure points pulls back to a 4-path with the pulled-back ends", _arc_cases)
def _check_pure_arc_pullback(case: Case, params: SuiteParams):
    c = case.inputs["C"]
    if not pure_only(c):
        return EXCLUDED
    z, w = kh.classify_k(c).endpoints
    got = classify_path(gamma_inv_set(c), Adjacency.FOUR)
    if got.kind is not Kind.PATH or set(got.endpoints) != {gamma_inv(z), gamma_inv(w)}:
        return (f"4-path with ends {gamma_inv(z)}, {gamma_inv(w)}", f"{got.kind.value} {got.endpoints}")
    return None


def _containment_cases(params: SuiteParams) -> Iterator[Case]:
    for arc in enumerate_arcs(params.window, params.max_size, min_size=2, cap=params.cap):
        yield Case((0,) + _key(arc), {"C": arc, "shape": "arc"})
    for case in _jordan_curves(params):
        yield Case((1,) + case.key, {"C": case.inputs["J"], "shape": "jordan"})
    for d, i, a in _random_sets(params):
        yield Case((2, d, i), {"C": a, "shape": "any"})


@suite("containment", "gamma_star(gamma_inv(A)) keeps exactly the pure points of A; it contains every "
       "Jordan curve, and every arc except its mixed endpoints", _containment_cases)
def _check_containment(case: Case, params: SuiteParams):
    c, shape = case.inputs["C"], case.inputs["shape"]
    back = gamma_star(gamma_inv_set(c))
    if {p for p in back if kh.is_pure(p)} != {p for p in c if kh.is_pure(p)}:
        return ("same pure points", "pure points differ")
    if shape == "jordan" and not c <= back:
        return ("J inside gamma_star(gamma_inv(J))", f"missing {canonical(c - back)}")
    if shape == "arc":
        ends = set(kh.classify_k(c).endpoints)
        mixed_ends = {e for e in ends if kh.is_mixed(e)}
        if not (c - mixed_ends) <= back:
            return ("arc minus mixed ends inside the closure", f"missing {canonical((c - mixed_ends) - back)}")
        if mixed_ends & back:
            return ("mixed endpoints dropped", f"kept {canonical(mixed_ends & back)}")
    return None


def _path8_cases(params: SuiteParams) -> Iterator[Case]:
    for c in enumerate_paths(params.window, params.max_size, Adjacency.EIGHT, cap=params.cap):
        yield Case(_key(c), {"C": c})


@suite("endpoint-degree", "in gamma_star of an 8-path, images of the 8-endpoints have one neighbour and every "
       "other point two", _path8_cases)
def _check_endpoint_degree(case: Case, params: SuiteParams):
    c = case.inputs["C"]
    image = gamma_star(c)
    ends = {gamma(e) for e in classify_path(c, Adjacency.EIGHT).endpoints}
    for z in sorted(image):
        deg = len(kh.adjacency(z) & image)
        want = 1 if z in ends else 2
        if deg != want:
            return (f"|A({z}) & gamma_star(C)| == {want}", f"{deg}")
    return None


def _path4_cases(params: SuiteParams) -> Iterator[Case]:
    for c in enumerate_paths(params.window, params.max_size, Adjacency.FOUR, cap=params.cap):
        yield Case(_key(c), {"C": c})


@suite("path-gamma", "gamma of a 4-path is an arc", _path4_cases)
def _check_path_gamma(case: Case, params: SuiteParams):
    got = kh.classify_k(gamma_set(case.inputs["C"]))
    if got.kind is not Kind.ARC:
        return ("arc", got.kind.value)
    return None


def _curve_gamma_star_cases(params: SuiteParams) -> Iterator[Case]:
    for c in _closed_curves(params, Adjacency.EIGHT):
        yield Case((0,) + _key(c), {"C": c, "direction": "curve=>jordan"})
    kw = _k2_window(params)
    for j in enumerate_jordan_curves(kw, _k2_size(params), cap=kw.area):
        yield Case((1,) + _key(j), {"J": j, "direction": "jordan=>curve"})


@suite("curve-gamma-star", "C is a closed 8-curve iff gamma_star(C) is a Jordan curve", _curve_gamma_star_cases)
def _check_curve_gamma_star(case: Case, params: SuiteParams):
    if case.inputs["direction"] == "curve=>jordan":
        if len(case.inputs["C"]) < 4:
            return EXCLUDED  # 8-triangles: a Jordan curve needs four points
        got = kh.classify_k(gamma_star(case.inputs["C"]))
        if got.kind is not Kind.JORDAN_CURVE:
            return ("Jordan curve", got.kind.value)
        return None
    j = case.inputs["J"]
    pre = gamma_inv_set(j)
    if not all(p in params.window for p in pre) or gamma_star(pre) != j:
        return EXCLUDED
    got = classify_path(pre, Adjacency.EIGHT)
    if got.kind is not Kind.CLOSED_CURVE:
        return ("closed 8-curve", got.kind.value)
    return None


@suite("curve-pullback", "a pure Jordan curve pulls back to a closed 4-curve; any Jordan curve pulls back to a "
       "closed 8-curve iff gamma_star restores it", _jordan_curves)
def _check_curve_pullback(case: Case, params: SuiteParams):
    j = case.inputs["J"]
    pre = gamma_inv_set(j)
    if pure_only(j) and classify_path(pre, Adjacency.FOUR).kind is not Kind.CLOSED_CURVE:
        return ("closed 4-curve", classify_path(pre, Adjacency.FOUR).kind.value)
    closed8 = classify_path(pre, Adjacency.EIGHT).kind is Kind.CLOSED_CURVE
    restored = gamma_star(pre) == j
    if closed8 != restored:
        return (f"closed 8-curve ({closed8}) iff restored", f"restored={restored}")
    return None


# -- connectivity ---------------------------------------------------------------

@suite("connectivity-4", "A is 4-connected iff gamma(A) is connected", _random_grid_cases)
def _check_connectivity_4(case: Case, params: SuiteParams):
    a = case.inputs["A"]
    left, right = is_k_connected(a, Adjacency.FOUR), kh.is_connected(gamma_set(a))
    if left != right:
        return (f"4-connected={left}", f"gamma(A) connected={right}")
    return None


@suite("connectivity-8", "A is 8-connected iff gamma_star(A) is connected", _random_grid_cases)
def _check_connectivity_8(case: Case, params: SuiteParams):
    a = case.inputs["A"]
    left, right = is_k_connected(a, Adjacency.EIGHT), kh.is_connected(gamma_star(a))
    if left != right:
        return (f"8-connected={left}", f"gamma_star(A) connected={right}")
    return None


def _k2_component_cases(params: SuiteParams) -> Iterator[Case]:
    params.window.check_cap(params.cap)
    for d, i, s in _random_sets(params):
        for n, comp in enumerate(kh.k_components(s)):
            yield Case((d, i, n), {"C": comp})


@suite("connectivity-pullback", "the preimage of a connected subset of K^2 is 8-connected", _k2_component_cases)
def _check_connectivity_pullback(case: Case, params: SuiteParams):
    c = case.inputs["C"]
    if not kh.is_connected(c):
        return EXCLUDED
    if not is_k_connected(gamma_inv_set(c), Adjacency.EIGHT):
        return ("8-connected preimage", "disconnected")
    return None


def _grid_component_cases(params: SuiteParams) -> Iterator[Case]:
    params.window.check_cap(params.cap)
    for d, i, s in _random_sets(params):
        yield Case((d, i, -1), {"A": s})
        for n, comp in enumerate(grid.components(s, Adjacency.FOUR)):
            yield Case((d, i, n), {"A": comp})


@suite("gamma-star-connectivity", "if gamma(A) is connected so is gamma_star(A)", _grid_component_cases)
def _check_gamma_star_connectivity(case: Case, params: SuiteParams):
    a = case.inputs["A"]
    if not kh.is_connected(gamma_set(a)):
        return EXCLUDED
    if not kh.is_connected(gamma_star(a)):
        return ("gamma_star(A) connected", "disconnected")
    return None


def _union_cases(params: SuiteParams) -> Iterator[Case]:
    params.window.check_cap(params.cap)
    for d, i, s in _random_sets(params):
        t = random_grid_set(params.window, params.densities[d], derive_seed(params.seed, d, i, 1))
        pieces = list(grid.components(s, Adjacency.EIGHT))
        if not pieces:
            continue
        a = max(pieces, key=len)
        for n, b in enumerate(pieces):
            if b is not a:
                yield Case((d, i, 0, n), {"A": a, "B": b})
        for n, b in enumerate(grid.components(t - a, Adjacency.EIGHT)):
            yield Case((d, i, 1, n), {"A": a, "B": b})


@suite("union-8", "disjoint 8-connected A, B whose images touch a common mixed point have an 8-connected union",
       _union_cases)
def _check_union(case: Case, params: SuiteParams):
    a, b = case.inputs["A"], case.inputs["B"]
    ga, gb = gamma_set(a), gamma_set(b)
    bridge = any(kh.adjacency(e) & gb for q in ga for e in kh.adjacency(q) if kh.is_mixed(e))
    if not bridge:
        return EXCLUDED
    if not is_k_connected(a | b, Adjacency.EIGHT):
        return ("A | B 8-connected", "disconnected")
    return None


def _disconnection_cases(params: SuiteParams) -> Iterator[Case]:
    params.window.check_cap(params.cap)
    for d, i, s in _random_sets(params):
        pieces = list(grid.components(s, Adjacency.EIGHT))
        for n in range(len(pieces) - 1):
            yield Case((0, d, i, n), {"A": pieces[n], "B": pieces[n + 1], "form": "gamma"})
    for case in _jordan_curves(params):
        j = case.inputs["J"]
        region = _complement_region(j)
        sample = _sample_subsets(region, derive_seed(params.seed, *itertools.chain.from_iterable(case.key[0])))
        pieces = list(grid.components(sample, Adjacency.EIGHT))
        for n in range(min(len(pieces) - 1, 3)):
            yield Case((1,) + case.key + (n,), {"J": j, "A": pieces[n], "B": pieces[n + 1], "form": "expanded"})
        yield Case((2,) + case.key, {"J": j, "form": "fixed-sides"})


@suite("disconnection", "pieces that are not 8-adjacent stay apart in K^2, both as images and as expanded sides; "
       "the two 4-component sides of a gamma_star-fixed curve are apart", _disconnection_cases)
def _check_disconnection(case: Case, params: SuiteParams):
    form = case.inputs["form"]
    if form == "gamma":
        a, b = case.inputs["A"], case.inputs["B"]
        if kh.is_connected(gamma_set(a) | gamma_set(b)):
            return ("gamma(A) | gamma(B) disconnected", "connected")
        return None
    j = case.inputs["J"]
    if form == "expanded":
        a, b = case.inputs["A"], case.inputs["B"]
        if kh.is_connected(expanded_side(a, j) | expanded_side(b, j)):
            return ("expanded sides of A and B disconnected", "connected")
        return None
    if gamma_star(gamma_inv_set(j)) != j:
        return EXCLUDED
    pre = gamma_inv_set(j)
    region = _complement_region(j)
    parts = grid.components(region, Adjacency.FOUR)
    window = frozenset(box_points(analysis_window(j)))
    sides = [expanded_side(p, j) & window for p in parts]
    if len(sides) != 2:
        return ("two 4-components of the preimage complement", f"{len(sides)} (preimage size {len(pre)})")
    if any(s & j for s in sides):
        return EXCLUDED
    if kh.is_connected(sides[0] | sides[1]):
        return ("union of the two sides disconnected", "connected")
    return None


# -- the bracket operator and expanded sides ---------------------------------------

def _bracket_cases(params: SuiteParams) -> Iterator[Case]:
    for case in _jordan_curves(params):
        j = case.inputs["J"]
        if len(j) <= 4:
            continue
        region = _complement_region(j)
        sample = _sample_subsets(region, derive_seed(params.seed, *itertools.chain.from_iterable(case.key[0])))
        yield Case(case.key + (0,), {"J": j, "A": sample, "k": 0})
        for k in (Adjacency.FOUR, Adjacency.EIGHT):
            for n, piece in enumerate(grid.components(sample, k)):
                if n >= 4:
                    break
                yield Case(case.key + (int(k), n), {"J": j, "A": piece, "k": int(k)})


@suite("bracket-adjacency", "every point of [A, J] is adjacent to gamma(A) when |J| > 4", _bracket_cases)
def _check_bracket_adjacency(case: Case, params: SuiteParams):
    a, j = case.inputs["A"], case.inputs["J"]
    ga = gamma_set(a)
    for x in sorted(bracket(a, j)):
        if not kh.adjacency(x) & ga:
            return ("adjacent to gamma(A)", f"{x} is not")
    return None


@suite("expanded-connected", "gamma_star(A) | [A, J] is connected for 4-connected A, and for 8-connected A "
       "when J is pure (then also off J)", _bracket_cases)
def _check_expanded_connected(case: Case, params: SuiteParams):
    a, j, k = case.inputs["A"], case.inputs["J"], case.inputs["k"]
    if k == 0:
        return EXCLUDED
    if k == 8 and not (pure_only(j) and len(j) > 4):
        return EXCLUDED
    side = expanded_side(a, j)
    if not kh.is_connected(side):
        return ("expanded side connected", "disconnected")
    if k == 8 and side & j:
        return ("expanded side off the curve", f"meets J at {canonical(side & j)}")
    return None


# -- topological Jordan theorems ----------------------------------------------------

def _decomposition_failure(j: frozenset, expected: set[Regime], adjacency_to_both: bool | None):
    """``adjacency_to_both=None`` observes the adjacency clause without asserting it."""
    try:
        dec = decompose(j)
    except DecompositionError as err:
        return ("two sides partitioning the complement", str(err))
    if dec.regime not in expected:
        return (f"regime in {sorted(r.value for r in expected)}", dec.regime.value)
    oracle = kh.complement_components_k(j)
    if len(oracle) != 2:
        return ("2 components (oracle)", f"{len(oracle)}")
    if (dec.component_a, dec.component_b) != (oracle.inner[0], oracle.outer):
        return ("decomposition equals the flood-fill components", "sides differ")
    touching = all(kh.adjacency(x) & dec.component_a and kh.adjacency(x) & dec.component_b for x in j)
    if adjacency_to_both is None:
        return Observed("every curve point adjacent to both sides" if touching
                        else "some curve point misses a side")
    if adjacency_to_both and not touching:
        x = min(x for x in j if not (kh.adjacency(x) & dec.component_a and kh.adjacency(x) & dec.component_b))
        return ("each curve point adjacent to both components", f"{x} is not")
    return None


@suite("jordan-pure", "a pure Jordan curve with more than 4 points has two complement components, each "
       "adjacent to every curve point", _jordan_curves)
def _check_jordan_pure(case: Case, params: SuiteParams):
    j = case.inputs["J"]
    if len(j) <= 4 or not pure_only(j):
        return EXCLUDED
    return _decomposition_failure(j, {Regime.PURE_ONLY}, True)


@suite("jordan-gamma-fixed", "a Jordan curve with more than 4 points fixed by gamma_star(gamma_inv(.)) has two "
       "complement components, each adjacent to every curve point", _jordan_curves)
def _check_jordan_gamma_fixed(case: Case, params: SuiteParams):
    j = case.inputs["J"]
    if len(j) <= 4 or gamma_star(gamma_inv_set(j)) != j:
        return EXCLUDED
    return _decomposition_failure(j, {Regime.GAMMA_STAR_FIXED, Regime.PURE_ONLY}, True)


@suite("jordan-sj-singleton", "a Jordan curve with S_J = {m} and gamma_star(gamma_inv(J)) = J | {m} has two "
       "complement components", _jordan_curves, needs_witness=True)
def _check_jordan_sj(case: Case, params: SuiteParams):
    j = case.inputs["J"]
    if len(j) <= 4:
        return EXCLUDED
    sj = s_j(j)
    if len(sj) != 1 or gamma_star(gamma_inv_set(j)) != j | sj:
        return EXCLUDED
    return _decomposition_failure(j, {Regime.SJ_SINGLETON}, None)


@suite("jm-surgery", "for m in S_J with the parity condition, J_m is a Jordan curve, S_(J_m) is inside S_J and "
       "misses m", _jordan_curves)
def _check_jm(case: Case, params: SuiteParams):
    j = case.inputs["J"]
    if len(j) <= 4:
        return EXCLUDED
    sj = s_j(j)
    if not sj:
        return EXCLUDED
    for m in sorted(sj):
        try:
            rewired = j_m(j, m)
        except HypothesisError:
            continue
        except DecompositionError as err:
            return ("J_m postconditions", str(err))
        if len(rewired) != len(j):
            return ("|J_m| == |J|", f"{len(rewired)}")
        if len(sj) == 1 and gamma_star(gamma_inv_set(j)) == j | sj:
            if gamma_star(gamma_inv_set(rewired)) != rewired:
                return ("J_m fixed by gamma_star(gamma_inv(.))", "not fixed")
            if s_j(rewired):
                return ("S_(J_m) empty", f"{canonical(s_j(rewired))}")
    return None


@suite("sj-conjecture-explore", "exploratory: curves with gamma_star(gamma_inv(J)) = J | S_J and |S_J| > 1; "
       "reports how many have two complement components", _jordan_curves, informational=True)
def _check_sj_conjecture(case: Case, params: SuiteParams):
    j = case.inputs["J"]
    if len(j) <= 4:
        return EXCLUDED
    sj = s_j(j)
    if len(sj) <= 1 or gamma_star(gamma_inv_set(j)) != j | sj:
        return EXCLUDED
    n = len(kh.complement_components_k(j))
    if n != 2:
        return ("2 components (conjectured)", f"{n}")
    return Observed(f"|S_J| = {len(sj)}, two components")


# -- runner -------------------------------------------------------------------------

@dataclass
class _Tally:
    examined: int = 0
    excluded: int = 0
    worst: Counterexample | None = None
    observed: Counter = field(default_factory=Counter)

    def merge(self, other: "_Tally") -> "_Tally":
        worst = min((c for c in (self.worst, other.worst) if c is not None), key=lambda c: c.key, default=None)
        return _Tally(self.examined + other.examined, self.excluded + other.excluded, worst,
                      self.observed + other.observed)


def _check_chunk(name: str, params: SuiteParams, cases: list[Case]) -> _Tally:
    spec = REGISTRY[name]
    tally = _Tally()
    for case in cases:
        outcome = spec.check(case, params)
        if outcome == EXCLUDED and not isinstance(outcome, Observed):
            tally.excluded += 1
            continue
        tally.examined += 1
        if isinstance(outcome, Observed):
            tally.observed[str(outcome)] += 1
        elif outcome is not None and (tally.worst is None or case.key < tally.worst.key):
            tally.worst = Counterexample(case.key, case.inputs, *outcome)
    return tally


def _chunks(cases: Iterable[Case], size: int) -> Iterator[list[Case]]:
    it = iter(cases)
    while chunk := list(itertools.islice(it, size)):
        yield chunk


def run_suite(name: str, params: SuiteParams | None = None) -> VerificationReport:
    """Run one registered suite; raises ``UnknownSuiteError`` for an unknown name."""
    if name not in REGISTRY:
        raise UnknownSuiteError(name)
    params = SuiteParams() if params is None else params
    spec = REGISTRY[name]
    start = time.perf_counter()
    if params.jobs > 1:
        with ProcessPoolExecutor(max_workers=params.jobs) as pool:
            futures = [pool.submit(_check_chunk, name, params, chunk) for chunk in _chunks(spec.cases(params), 2000)]
            tally = functools.reduce(_Tally.merge, (f.result() for f in futures), _Tally())
    else:
        tally = _check_chunk(name, params, list(spec.cases(params)))
    worst = tally.worst

    report = VerificationReport(name, tally.examined, worst is None, worst, 0.0, tally.excluded, spec.informational,
                                params.to_json())
    report.notes.extend(f"{tag}: {n}" for tag, n in sorted(tally.observed.items()))
    if spec.informational:
        if worst is not None:
            report.notes.append(f"conjecture not observed on {canonical(worst.inputs['J'])}: {worst.actual}")
        report.passed, report.first_counterexample = True, None
    if spec.needs_witness and tally.examined == 0:
        report.passed = False
        report.first_counterexample = Counterexample((), {}, "at least one curve meeting the hypothesis",
                                                     "no witness in the window")
    report.elapsed = time.perf_counter() - start
    return report


def suite_names() -> list[str]:
    return sorted(REGISTRY)
