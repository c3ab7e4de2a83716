"""Compare the compiled and pure-Python all-pairs BFS backends.

    python3 benchmarks/bench_bfs.py [--sizes 100 300 600] [--repeat 3]

Each graph is a connected G(n, p) sample with mean degree about 8. Times are
the best of ``--repeat`` runs of :func:`predist.graph.bfs_distances`.
"""

import argparse
import timeit

import networkx as nx
import numpy as np

from predist import _accel
from predist.graph import Graph, bfs_distances


def sample(n, seed):
    p = min(1.0, 8.0 / n)
    while True:
        h = nx.gnp_random_graph(n, p, seed=seed)
        if nx.is_connected(h):
            return Graph.from_edges(n, h.edges())
        seed += 1


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[100, 300, 600])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    backends = sorted(_accel.BACKENDS)
    if "compiled" not in backends:
        print("compiled backend not built; only the python backend is timed")
    print(f"{'n':>6} " + " ".join(f"{b:>12}" for b in backends) + "   speedup")
    for n in args.sizes:
        g = sample(n, seed=n)
        times = {}
        results = {}
        for backend in backends:
            previous = _accel.use_backend(backend)
            try:
                times[backend] = min(timeit.repeat(lambda: bfs_distances(g), number=1, repeat=args.repeat))
                results[backend] = bfs_distances(g).dist
            finally:
                _accel.use_backend(previous)
        if len(results) == 2 and not np.array_equal(results["compiled"], results["python"]):
            raise SystemExit(f"backends disagree at n={n}")
        speedup = times["python"] / times["compiled"] if "compiled" in times else float("nan")
        print(f"{n:>6} " + " ".join(f"{times[b] * 1000:>10.2f}ms" for b in backends) + f"   {speedup:7.1f}x")


if __name__ == "__main__":
    main()
