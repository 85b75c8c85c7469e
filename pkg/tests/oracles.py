"""Independent reference implementations, written from the definitions only.

Nothing here imports the package. Each oracle is deliberately naive: plain
BFS over explicit neighbour predicates, brute force over every subset of a
small window, and topology computed from minimal open neighbourhoods.
"""
from __future__ import annotations

import itertools
from collections import deque


# -- Z^2 ----------------------------------------------------------------------

def adj4(p, q):
    return abs(p[0] - q[0]) + abs(p[1] - q[1]) == 1


def adj8(p, q):
    return p != q and max(abs(p[0] - q[0]), abs(p[1] - q[1])) == 1


def flood_components(points, adjacent):
    """Components of ``points`` under the predicate ``adjacent``; quadratic scan per pop."""
    left = set(points)
    comps = []
    while left:
        seed = min(left)
        left.discard(seed)
        comp, queue = {seed}, deque([seed])
        while queue:
            p = queue.popleft()
            for q in [q for q in left if adjacent(p, q)]:
                left.discard(q)
                comp.add(q)
                queue.append(q)
        comps.append(frozenset(comp))
    return comps


def is_connected(points, adjacent):
    return len(flood_components(points, adjacent)) <= 1 if points else True


def box(points, margin):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs) - margin, max(xs) + margin, min(ys) - margin, max(ys) + margin


def box_points(b):
    return [(x, y) for x in range(b[0], b[1] + 1) for y in range(b[2], b[3] + 1)]


def complement_split(curve, adjacent, margin=2):
    """(bounded components, merged border component) of the windowed complement."""
    b = box(curve, margin)
    rest = set(box_points(b)) - set(curve)
    comps = flood_components(rest, adjacent)

    def touches(c):
        return any(p[0] in (b[0], b[1]) or p[1] in (b[2], b[3]) for p in c)

    inner = [c for c in comps if not touches(c)]
    outer = frozenset().union(*[c for c in comps if touches(c)])
    return inner, outer


def degrees(points, adjacent):
    pts = list(points)
    return [sum(adjacent(p, q) for q in pts) for p in pts]


def is_closed_curve(points, adjacent):
    return bool(points) and all(d == 2 for d in degrees(points, adjacent)) and is_connected(points, adjacent)


def is_path(points, adjacent):
    """Degree profile (1, 1, 2, ..., 2) plus connectivity; at least two points."""
    if len(points) < 2:
        return False
    ds = sorted(degrees(points, adjacent))
    return ds[:2] == [1, 1] and all(d == 2 for d in ds[2:]) and is_connected(points, adjacent)


def all_subsets(cells, max_size=None):
    cells = sorted(cells)
    top = len(cells) if max_size is None else min(max_size, len(cells))
    for r in range(top + 1):
        for combo in itertools.combinations(cells, r):
            yield frozenset(combo)


# -- Khalimsky topology ---------------------------------------------------------

def line_nbhd(n):
    """Smallest open set of the digital line containing ``n``: odd integers are open points."""
    return {n} if n % 2 else {n - 1, n, n + 1}


def nbhd(p):
    return {(a, b) for a in line_nbhd(p[0]) for b in line_nbhd(p[1])}


def in_closure(x, y):
    """x lies in the closure of {y} iff every open set around x meets y iff y is in N(x)."""
    return y in nbhd(x)


def closure(p):
    x, y = p
    candidates = [(x + dx, y + dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1)]
    return {q for q in candidates if in_closure(q, p)}


def k_adjacent(p, q):
    """{p, q} connected: one lies in the closure of the other."""
    return p != q and (in_closure(p, q) or in_closure(q, p))


def topologically_connected(points):
    """No proper nonempty subset is open in the subspace topology and also closed."""
    pts = sorted(points)
    n = len(pts)
    if n <= 1:
        return True
    up = [{j for j in range(n) if pts[j] in nbhd(pts[i])} for i in range(n)]
    for mask in range(1, 2 ** (n - 1)):
        u = {i for i in range(n) if mask >> i & 1}
        rest = set(range(n)) - u
        if all(up[i] <= u for i in u) and all(up[i] <= rest for i in rest):
            return False
    return True


def _order(points):
    pts = sorted(points)
    return pts, [[pts[j] in nbhd(pts[i]) for j in range(len(pts))] for i in range(len(pts))]


def homeomorphic_to_interval(points):
    """Brute force: some bijection onto a Khalimsky interval preserves the specialization order."""
    pts, rel = _order(points)
    n = len(pts)
    for start in (0, 1):
        line = list(range(start, start + n))
        target = [[b in line_nbhd(a) for b in line] for a in line]
        for perm in itertools.permutations(range(n)):
            if all(rel[perm[i]][perm[j]] == target[i][j] for i in range(n) for j in range(n)):
                return True
    return False


def is_jordan(points):
    return len(points) >= 4 and is_closed_curve(points, k_adjacent)


def is_arc(points):
    """Arc by degree profile; single points count as degenerate arcs."""
    if len(points) == 1:
        return True
    return is_path(points, k_adjacent)


# -- slant map ----------------------------------------------------------------------

def slant(p):
    return (p[0] + p[1], p[1] - p[0])


def slant_inv(points):
    return {((u - v) // 2, (u + v) // 2) for u, v in points if (u - v) % 2 == 0}


def slant_star(points):
    image = {slant(p) for p in points}
    out = set(image)
    us = [q[0] for q in image] or [0]
    vs = [q[1] for q in image] or [0]
    for m in itertools.product(range(min(us) - 1, max(us) + 2), range(min(vs) - 1, max(vs) + 2)):
        if (m[0] - m[1]) % 2 == 0:
            continue
        if nbhd(m) - {m} <= image or closure(m) - {m} <= image:
            out.add(m)
    return out


# -- brute-force subset filtering --------------------------------------------------

def _bit_connected(mask, nb):
    seen = mask & -mask
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        fresh = nb[low.bit_length() - 1] & mask & ~seen
        seen |= fresh
        frontier |= fresh
    return seen == mask


def classify_subsets(cells, adjacent):
    """Every nonempty subset of ``cells``, sorted into degree classes by definition.

    Returns ``{"cycle": [...], "path": [...], "single": [...]}``: connected sets
    with all degrees 2, connected sets with profile (1, 1, 2, ..., 2), and
    single points. Sets are frozensets of cells.
    """
    cells = list(cells)
    n = len(cells)
    nb = [sum(1 << j for j in range(n) if adjacent(cells[i], cells[j])) for i in range(n)]
    out = {"cycle": [], "path": [], "single": []}
    for mask in range(1, 1 << n):
        if mask & (mask - 1) == 0:
            out["single"].append(mask)
            continue
        ones = 0
        bits = mask
        ok = True
        while bits:
            low = bits & -bits
            bits ^= low
            d = bin(nb[low.bit_length() - 1] & mask).count("1")
            if d == 1:
                ones += 1
                if ones > 2:
                    ok = False
                    break
            elif d != 2:
                ok = False
                break
        if not ok or ones == 1 or not _bit_connected(mask, nb):
            continue
        out["cycle" if ones == 0 else "path"].append(mask)
    return {kind: [frozenset(cells[i] for i in range(n) if m >> i & 1) for m in masks] for kind, masks in out.items()}
