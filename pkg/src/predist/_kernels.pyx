# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Mirrors :mod:`predist._fallback` exactly."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def all_pairs_bfs(const cnp.int32_t[::1] indptr, const cnp.int32_t[::1] indices, int n):
    """Hop distances from every vertex; unreachable pairs are -1."""
    cdef cnp.ndarray[cnp.int32_t, ndim=2] out = np.full((n, n), -1, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] dist = out
    cdef cnp.int32_t[::1] queue = np.empty(max(n, 1), dtype=np.int32)
    cdef int src, head, tail, u, v, j
    cdef cnp.int32_t du
    with nogil:
        for src in range(n):
            dist[src, src] = 0
            queue[0] = src
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[src, u] + 1
                for j in range(indptr[u], indptr[u + 1]):
                    v = indices[j]
                    if dist[src, v] < 0:
                        dist[src, v] = du
                        queue[tail] = v
                        tail += 1
    return out
