"""Brute-force search for a connected regular graph with D = d that is not distance-regular.

Scans every graph in the networkx atlas (up to 7 vertices), then random
regular graphs up to 14 vertices. Prints candidates with their gap
HM - q_{d-1}(k), largest gap first.
"""

import networkx as nx

from predist.characterize import analyze
from predist.graph import encode_graph6, parse_graph6


def candidates():
    for h in nx.graph_atlas_g()[1:]:
        yield h
    for n in range(6, 15):
        for k in range(2, n - 1):
            if n * k % 2:
                continue
            for seed in range(40):
                yield nx.random_regular_graph(k, n, seed=seed)


def main():
    found = {}
    for h in candidates():
        if h.number_of_nodes() < 2 or not nx.is_connected(h):
            continue
        degs = {deg for _, deg in h.degree()}
        if len(degs) != 1:
            continue
        g = parse_graph6(nx.to_graph6_bytes(h, header=False).decode().strip())
        gate = analyze(g, kinds=("adjacency",)).gates["adjacency"]
        if gate.D == gate.d and not nx.is_distance_regular(h):
            found.setdefault(encode_graph6(g), (g.n, gate.d, gate.hm - gate.target, gate.direct_residual))
    for g6, (n, d, gap, res) in sorted(found.items(), key=lambda kv: -kv[1][2])[:10]:
        print(f"{g6}\tn={n}\td=D={d}\tgap={gap:.6f}\tresidual={res:.3g}")


if __name__ == "__main__":
    main()
