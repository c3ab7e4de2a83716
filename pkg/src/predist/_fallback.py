"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``."""

from collections import deque

import numpy as np


def all_pairs_bfs(indptr, indices, n):
    """Hop distances from every vertex; unreachable pairs are -1."""
    nbrs = [indices[indptr[u]:indptr[u + 1]].tolist() for u in range(n)]
    dist = np.full((n, n), -1, dtype=np.int32)
    for src in range(n):
        row = [-1] * n
        row[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for v in nbrs[u]:
                if row[v] < 0:
                    row[v] = du
                    queue.append(v)
        dist[src] = row
    return dist
