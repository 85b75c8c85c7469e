"""Pure-Python versions of the hot kernels.

Same signatures and outputs as the compiled ``_core`` module; used when the
extension is missing or when ``DIGIPLANE_PURE=1`` is set.
"""
from __future__ import annotations

from collections import deque

import numpy as np

MODE_KHALIMSKY = 0

_AXIS = ((1, 0), (-1, 0), (0, 1), (0, -1))
_DIAG = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def label_grid(mask: np.ndarray, mode: int, parity: int = 0) -> tuple[np.ndarray, int]:
    """Label the connected components of the nonzero cells of ``mask``.

    ``mode`` is 4, 8 or ``MODE_KHALIMSKY``. In Khalimsky mode a cell ``(i, j)``
    is pure when ``i + j + parity`` is even, and only pure cells get diagonal
    edges. Labels are assigned in row-major scan order, background is -1.
    """
    h, w = mask.shape
    labels = np.full((h, w), -1, dtype=np.int32)
    lab = labels.tolist()
    cells = mask.tolist()
    count = 0
    for i in range(h):
        row = cells[i]
        for j in range(w):
            if not row[j] or lab[i][j] >= 0:
                continue
            lab[i][j] = count
            queue = deque([(i, j)])
            while queue:
                a, b = queue.popleft()
                if mode == 8 or (mode == MODE_KHALIMSKY and (a + b + parity) % 2 == 0):
                    offsets = _AXIS + _DIAG
                else:
                    offsets = _AXIS
                for da, db in offsets:
                    u, v = a + da, b + db
                    if 0 <= u < h and 0 <= v < w and cells[u][v] and lab[u][v] < 0:
                        lab[u][v] = count
                        queue.append((u, v))
            count += 1
    labels[:, :] = lab
    return labels, count


def induced_paths(indptr: np.ndarray, indices: np.ndarray, min_size: int,
                  max_size: int, closed: bool) -> np.ndarray:
    """Enumerate induced paths (or induced cycles) of a CSR graph.

    Returns an ``(n, max_size)`` int32 array, one vertex sequence per row,
    padded with -1. Paths are listed once, from the smaller endpoint; cycles
    once, starting at their smallest vertex with ``row[1] < row[-1]``.
    """
    ptr = indptr.tolist()
    nbr = indices.tolist()
    n = len(ptr) - 1
    cnt = [0] * n
    in_path = [False] * n
    near_start = [False] * n
    out: list[list[int]] = []
    pad = [-1] * max_size

    def push(v: int) -> None:
        in_path[v] = True
        for u in nbr[ptr[v]:ptr[v + 1]]:
            cnt[u] += 1

    def pop(v: int) -> None:
        in_path[v] = False
        for u in nbr[ptr[v]:ptr[v + 1]]:
            cnt[u] -= 1

    for s in range(n):
        for u in nbr[ptr[s]:ptr[s + 1]]:
            near_start[u] = True
        path = [s]
        cursor = [ptr[s]]
        push(s)
        if not closed and min_size <= 1:
            out.append(path + pad[1:])
        while path:
            depth = len(path)
            t = path[-1]
            if cursor[-1] == ptr[t + 1]:
                pop(path.pop())
                cursor.pop()
                continue
            v = nbr[cursor[-1]]
            cursor[-1] += 1
            if in_path[v]:
                continue
            c = cnt[v]
            if closed:
                if v < s:
                    continue
                if c == 1:
                    if depth + 2 <= max_size:
                        path.append(v)
                        cursor.append(ptr[v])
                        push(v)
                elif (c == 2 and depth >= 2 and near_start[v] and path[1] < v
                      and min_size <= depth + 1 <= max_size):
                    out.append(path + [v] + pad[depth + 1:])
            elif c == 1:
                if s < v and depth + 1 >= min_size:
                    out.append(path + [v] + pad[depth + 1:])
                if depth + 1 < max_size:
                    path.append(v)
                    cursor.append(ptr[v])
                    push(v)
        for u in nbr[ptr[s]:ptr[s + 1]]:
            near_start[u] = False
    if not out:
        return np.empty((0, max_size), dtype=np.int32)
    return np.asarray(out, dtype=np.int32)
