import random
from pathlib import Path

import networkx as nx
import numpy as np
import pytest

from predist.graph import Graph

DATA = Path(__file__).parent / "data"


def from_nx(h):
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def random_connected_regular(count, nmax=30, seed=0, nmin=4):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(nmin, nmax)
        k = rng.randint(2, n - 1)
        if n * k % 2:
            continue
        h = nx.random_regular_graph(k, n, seed=rng.randrange(2**31))
        if nx.is_connected(h):
            out.append(from_nx(h))
    return out


def random_connected(count, nmax=30, seed=0, nmin=3):
    """Connected G(n, p) graphs with p spread over sparse and dense regimes."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(nmin, nmax)
        p = rng.uniform(1.2 * np.log(n) / n, 0.9)
        h = nx.gnp_random_graph(n, min(p, 1.0), seed=rng.randrange(2**31))
        if nx.is_connected(h):
            out.append(from_nx(h))
    return out


def regular_diameter_two_pool(count=60, seed=7):
    """Connected regular graphs of diameter 2, including non-strongly-regular ones."""
    rng = random.Random(seed)
    out = []
    for n in range(5, 17):
        for jumps in ([1, 2], [1, 3], [1, 2, 3], [1, 4], [2, 3]):
            h = nx.circulant_graph(n, [j for j in jumps if j <= n // 2])
            if nx.is_connected(h) and nx.diameter(h) == 2 and len({d for _, d in h.degree()}) == 1:
                out.append(from_nx(h))
    while len(out) < count:
        n = rng.randint(6, 20)
        k = rng.randint(n // 2, n - 2)
        if n * k % 2:
            continue
        h = nx.random_regular_graph(k, n, seed=rng.randrange(2**31))
        if nx.is_connected(h) and nx.diameter(h) == 2:
            out.append(from_nx(h))
    return out


@pytest.fixture(scope="session")
def corpus():
    from predist.corpus import builtin_corpus

    return builtin_corpus()


@pytest.fixture(scope="session")
def corpus_analyses(corpus):
    from predist.characterize import analyze

    return {name: analyze(g) for name, g in corpus.items()}


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
