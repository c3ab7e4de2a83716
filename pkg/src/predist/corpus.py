"""Small named graphs used by the self-test and the test suite."""

from itertools import combinations

from .graph import Graph, parse_graph6

# Circulant C_12(1, 5, 6): connected, 5-regular, D = d = 3, not distance-regular.
# Found by tools/find_witness.py; HM - q_2(5) = 2/3 and max|p_2(A) + p_3(A) - A_3| = 2/3.
NON_DRG_WITNESS = "KhEMNDpMGwpp"


def complete_graph(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def circulant_graph(n, jumps):
    return Graph.from_edges(n, {tuple(sorted((i, (i + j) % n))) for i in range(n) for j in jumps})


def hypercube_graph(dim):
    n = 1 << dim
    return Graph.from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(dim) if v < v ^ (1 << b)])


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def builtin_corpus():
    """Name -> graph for the self-test corpus (connected graphs only)."""
    corpus = {}
    for n in range(2, 7):
        corpus[f"K{n}"] = complete_graph(n)
    for n in range(4, 10):
        corpus[f"C{n}"] = cycle_graph(n)
    corpus["Petersen"] = petersen_graph()
    corpus["Q3"] = hypercube_graph(3)
    corpus["Q4"] = hypercube_graph(4)
    corpus["K1,3"] = star_graph(3)
    corpus["K1,5"] = star_graph(5)
    corpus["witness"] = parse_graph6(NON_DRG_WITNESS)
    return corpus


DRG_NAMES = frozenset(
    [f"K{n}" for n in range(2, 7)] + [f"C{n}" for n in range(4, 10)] + ["Petersen", "Q3", "Q4"]
)
