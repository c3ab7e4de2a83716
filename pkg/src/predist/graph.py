"""Graphs, graph6 / edge-list input, BFS distances and degree statistics.

Everything here is exact integer arithmetic; floating point enters only in
:mod:`predist.spectral`.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _accel
from .config import DisconnectedGraphError, ParseError

GRAPH6_HEADER = ">>graph6<<"


def _frozen(arr):
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with dense adjacency."""

    n: int
    adjacency: np.ndarray = field(repr=False)

    def __post_init__(self):
        adj = np.asarray(self.adjacency)
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if adj.shape != (self.n, self.n):
            raise ValueError(f"adjacency shape {adj.shape} does not match n={self.n}")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency is not symmetric")
        if np.any(np.diag(adj)):
            raise ValueError("adjacency has a nonzero diagonal (self-loop)")
        if not np.isin(adj, (0, 1)).all():
            raise ValueError("adjacency entries must be 0/1")
        object.__setattr__(self, "adjacency", _frozen(adj.astype(np.int8, copy=True)))

    @classmethod
    def from_edges(cls, n, edges):
        adj = np.zeros((n, n), dtype=np.int8)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = 1
        return cls(n, adj)

    @cached_property
    def edges(self):
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return tuple(zip(us.tolist(), vs.tolist()))

    @property
    def num_edges(self):
        return len(self.edges)

    @cached_property
    def degrees(self):
        return _frozen(self.adjacency.sum(axis=1, dtype=np.int64))

    def neighbors(self, v):
        return np.flatnonzero(self.adjacency[v]).tolist()

    def csr(self):
        """Compressed rows ``(indptr, indices)`` as contiguous int32 arrays."""
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        np.cumsum(self.degrees, out=indptr[1:])
        indices = np.ascontiguousarray(np.nonzero(self.adjacency)[1], dtype=np.int32)
        return indptr, indices

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adjacency, other.adjacency)

    __hash__ = None

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.num_edges})"


@dataclass(frozen=True)
class DegreeStats:
    degrees: tuple
    mean_degree: float
    mean_square_degree: float
    is_regular: bool


@dataclass(frozen=True, eq=False)
class DistanceData:
    """All-pairs hop distances of a connected graph.

    ``counts[x, i]`` is the number of vertices at distance ``i`` from ``x``.
    """

    dist: np.ndarray = field(repr=False)
    diameter: int
    counts: np.ndarray = field(repr=False)

    @property
    def n(self):
        return self.dist.shape[0]

    def indicator(self, i):
        """The 0/1 distance-``i`` matrix ``A_i``."""
        return (self.dist == i).astype(np.int64)

    @property
    def distance_indicator(self):
        return [self.indicator(i) for i in range(self.diameter + 1)]

    def k(self, i):
        """Per-vertex counts at distance ``i`` (zeros past the diameter)."""
        if i > self.diameter:
            return np.zeros(self.n, dtype=np.int64)
        return self.counts[:, i]


# -- graph6 -----------------------------------------------------------------

def _upper_triangle_column_order(n):
    """Index pairs (0,1), (0,2), (1,2), (0,3), ... as graph6 packs them."""
    cols, rows = np.tril_indices(n, -1)
    return rows, cols


def _check_printable(data, start=0):
    for off, b in enumerate(data[start:], start):
        if not 63 <= b <= 126:
            raise ParseError(f"graph6: byte {b!r} at offset {off} outside the printable range 63..126")


def parse_graph6(text):
    """Decode one graph6 string (an optional ``>>graph6<<`` header is allowed)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        s = s[base:]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise ParseError(f"graph6: non-ASCII character at offset {base + exc.start}") from None
    if not data:
        raise ParseError(f"graph6: empty input at offset {base}")
    if data[0] == ord(">") or data[0] == ord(":") or data[0] == ord("&"):
        raise ParseError(f"graph6: unsupported header byte {chr(data[0])!r} at offset {base} "
                         "(sparse6/digraph6 are not handled)")
    _check_printable(data)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError(f"graph6: truncated 8-byte size field at offset {base + len(data)}")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise ParseError(f"graph6: truncated 4-byte size field at offset {base + len(data)}")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        pos = 4
    if n < 1:
        raise ParseError(f"graph6: vertex count must be at least 1 (header at offset {base})")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise ParseError(f"graph6: truncated bit vector, expected {nbytes} data bytes, "
                         f"input ends at offset {base + len(data)}")
    if len(body) > nbytes:
        raise ParseError(f"graph6: trailing data at offset {base + pos + nbytes}")

    chunks = np.frombuffer(body, dtype=np.uint8) - 63
    bits = np.unpackbits(chunks[:, None], axis=1)[:, 2:].ravel()[:nbits]
    adj = np.zeros((n, n), dtype=np.int8)
    rows, cols = _upper_triangle_column_order(n)
    adj[rows, cols] = bits
    adj |= adj.T
    return Graph(n, adj)


def _graph6_size(n):
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def encode_graph6(g):
    n = g.n
    rows, cols = _upper_triangle_column_order(n)
    bits = g.adjacency[rows, cols].astype(np.uint8)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)]).reshape(-1, 6)
    values = bits @ (1 << np.arange(5, -1, -1))
    return (_graph6_size(n) + bytes((values + 63).astype(np.uint8).tolist())).decode("ascii")


# -- edge lists -------------------------------------------------------------

def parse_edge_list(text):
    """Parse whitespace-separated 0-based pairs, with an optional leading ``n`` line.

    Without the ``n`` line the vertex count is one more than the largest id.
    """
    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [(no, toks) for no, toks in enumerate(lines, 1) if toks]

    def as_int(tok, no):
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"edge list: non-integer token {tok!r} on line {no}") from None

    n = None
    if lines and len(lines[0][1]) == 1:
        no, (tok,) = lines.pop(0)
        n = as_int(tok, no)
        if n < 1:
            raise ParseError(f"edge list: vertex count must be positive (line {no})")

    edges = set()
    for no, toks in lines:
        if len(toks) != 2:
            raise ParseError(f"edge list: expected two vertex ids on line {no}, got {len(toks)}")
        u, v = (as_int(t, no) for t in toks)
        if u < 0 or v < 0:
            raise ParseError(f"edge list: negative vertex id on line {no}")
        if u == v:
            raise ParseError(f"edge list: self-loop at vertex {u} on line {no}")
        if n is not None and max(u, v) >= n:
            raise ParseError(f"edge list: vertex id {max(u, v)} >= n={n} on line {no}")
        edges.add((min(u, v), max(u, v)))

    if n is None:
        if not edges:
            raise ParseError("edge list: no vertex count and no edges")
        n = 1 + max(max(e) for e in edges)
    return Graph.from_edges(n, sorted(edges))


# -- distances and degrees --------------------------------------------------

def bfs_distances(g):
    """All-pairs distances by one BFS per vertex (exact integers)."""
    indptr, indices = g.csr()
    dist = _accel.all_pairs_bfs(indptr, indices, g.n)
    if (dist < 0).any():
        raise DisconnectedGraphError("graph not connected")
    dist = _frozen(dist.astype(np.int64))
    diameter = int(dist.max())
    counts = np.stack([np.bincount(row, minlength=diameter + 1) for row in dist])
    return DistanceData(dist=dist, diameter=diameter, counts=_frozen(counts))


def is_connected(g):
    indptr, indices = g.csr()
    seen = np.zeros(g.n, dtype=bool)
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for v in indices[indptr[u]:indptr[u + 1]]:
            if not seen[v]:
                seen[v] = True
                stack.append(int(v))
    return bool(seen.all())


def degree_stats(g):
    deg = g.degrees
    return DegreeStats(
        degrees=tuple(deg.tolist()),
        mean_degree=float(deg.mean()),
        mean_square_degree=float((deg * deg).mean()),
        is_regular=bool((deg == deg[0]).all()),
    )


def laplacian_matrix(g):
    return np.diag(g.degrees.astype(float)) - g.adjacency.astype(float)
