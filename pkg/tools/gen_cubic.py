"""Write every cubic graph on 4..10 vertices, one graph6 line each.

Isomorphism classes are collected by seeded random sampling until the
known class counts are reached (connected: 1, 2, 5, 19; all: 1, 2, 6, 21).
Usage: python tools/gen_cubic.py tests/data
"""

import sys
from pathlib import Path

import networkx as nx

CONNECTED = {4: 1, 6: 2, 8: 5, 10: 19}
TOTAL = {4: 1, 6: 2, 8: 6, 10: 21}


def classes(n):
    reps = []
    seed = 0
    while len(reps) < TOTAL[n]:
        h = nx.random_regular_graph(3, n, seed=seed)
        seed += 1
        if not any(nx.is_isomorphic(h, r) for r in reps):
            reps.append(h)
        if seed > 500000:
            raise RuntimeError(f"gave up on n={n} with {len(reps)} classes")
    assert sum(nx.is_connected(r) for r in reps) == CONNECTED[n]
    return sorted((nx.to_graph6_bytes(r, header=False).decode().strip(), nx.is_connected(r)) for r in reps)


def main(outdir):
    outdir = Path(outdir)
    connected = []
    for n in sorted(TOTAL):
        reps = classes(n)
        connected += [g6 for g6, conn in reps if conn]
        if n == 10:
            (outdir / "cubic10.g6").write_text("".join(g6 + "\n" for g6, _ in reps))
    (outdir / "cubic_connected_le10.g6").write_text("".join(g6 + "\n" for g6 in connected))


if __name__ == "__main__":
    main(sys.argv[1])
