# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: grid component labeling and induced path/cycle search.

Mirrors ``digiplane._pure`` exactly (same arguments, same output order).
"""
import numpy as np
cimport numpy as cnp
from libcpp.vector cimport vector

cnp.import_array()

MODE_KHALIMSKY = 0

cdef int[8] _DA = [1, -1, 0, 0, 1, 1, -1, -1]
cdef int[8] _DB = [0, 0, 1, -1, 1, -1, 1, -1]


def label_grid(cnp.uint8_t[:, :] mask, int mode, int parity=0):
    cdef Py_ssize_t h = mask.shape[0], w = mask.shape[1]
    labels_arr = np.full((h, w), -1, dtype=np.int32)
    cdef int[:, :] labels = labels_arr
    cdef vector[int] queue
    cdef Py_ssize_t i, j, head
    cdef int a, b, u, v, k, n_off, count = 0
    for i in range(h):
        for j in range(w):
            if mask[i, j] == 0 or labels[i, j] >= 0:
                continue
            labels[i, j] = count
            queue.clear()
            queue.push_back(<int>(i * w + j))
            head = 0
            while head < <Py_ssize_t>queue.size():
                a = queue[head] // w
                b = queue[head] % w
                head += 1
                if mode == 8 or (mode == 0 and (a + b + parity) % 2 == 0):
                    n_off = 8
                else:
                    n_off = 4
                for k in range(n_off):
                    u = a + _DA[k]
                    v = b + _DB[k]
                    if 0 <= u < h and 0 <= v < w and mask[u, v] != 0 and labels[u, v] < 0:
                        labels[u, v] = count
                        queue.push_back(<int>(u * w + v))
            count += 1
    return labels_arr, count


def induced_paths(cnp.int32_t[:] indptr, cnp.int32_t[:] indices, int min_size,
                  int max_size, bint closed):
    cdef int n = indptr.shape[0] - 1
    cdef vector[int] cnt = vector[int](n, 0)
    cdef vector[char] in_path = vector[char](n, 0)
    cdef vector[char] near_start = vector[char](n, 0)
    cdef vector[int] path = vector[int](max_size + 1, 0)
    cdef vector[int] cursor = vector[int](max_size + 1, 0)
    cdef vector[int] out
    cdef int s, t, v, c, e, depth, q

    for s in range(n):
        for e in range(indptr[s], indptr[s + 1]):
            near_start[indices[e]] = 1
        depth = 1
        path[0] = s
        cursor[0] = indptr[s]
        in_path[s] = 1
        for e in range(indptr[s], indptr[s + 1]):
            cnt[indices[e]] += 1
        if not closed and min_size <= 1:
            out.push_back(s)
            for q in range(1, max_size):
                out.push_back(-1)
        while depth > 0:
            t = path[depth - 1]
            if cursor[depth - 1] == indptr[t + 1]:
                depth -= 1
                in_path[t] = 0
                for e in range(indptr[t], indptr[t + 1]):
                    cnt[indices[e]] -= 1
                continue
            v = indices[cursor[depth - 1]]
            cursor[depth - 1] += 1
            if in_path[v]:
                continue
            c = cnt[v]
            if closed:
                if v < s:
                    continue
                if c == 1:
                    if depth + 2 <= max_size:
                        path[depth] = v
                        cursor[depth] = indptr[v]
                        depth += 1
                        in_path[v] = 1
                        for e in range(indptr[v], indptr[v + 1]):
                            cnt[indices[e]] += 1
                elif (c == 2 and depth >= 2 and near_start[v] and path[1] < v
                      and min_size <= depth + 1 and depth + 1 <= max_size):
                    for q in range(depth):
                        out.push_back(path[q])
                    out.push_back(v)
                    for q in range(depth + 1, max_size):
                        out.push_back(-1)
            elif c == 1:
                if s < v and depth + 1 >= min_size:
                    for q in range(depth):
                        out.push_back(path[q])
                    out.push_back(v)
                    for q in range(depth + 1, max_size):
                        out.push_back(-1)
                if depth + 1 < max_size:
                    path[depth] = v
                    cursor[depth] = indptr[v]
                    depth += 1
                    in_path[v] = 1
                    for e in range(indptr[v], indptr[v + 1]):
                        cnt[indices[e]] += 1
        for e in range(indptr[s], indptr[s + 1]):
            near_start[indices[e]] = 0

    rows = out.size() // max_size
    result = np.empty((rows, max_size), dtype=np.int32)
    cdef int[:, :] res = result
    cdef Py_ssize_t r, col
    for r in range(rows):
        for col in range(max_size):
            res[r, col] = out[r * max_size + col]
    return result
