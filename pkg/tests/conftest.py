import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from graphsums import Graph


def atlas_graphs(max_n=5, min_n=1, connected=None):
    """Every graph up to isomorphism with min_n..max_n vertices, as Graphs."""
    out = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n < min_n:
            continue
        if n > max_n:
            break
        if connected is not None and n and nx.is_connected(g) != connected:
            continue
        out.append(Graph.from_edges(n, [(a + 1, b + 1) for a, b in g.edges()]))
    return out


def random_graph(rng, n, p=0.5, weights="symbolic"):
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph.from_edges(n, edges, weights)


def random_connected(rng, n, p=0.5, weights="symbolic"):
    while True:
        G = random_graph(rng, n, p, weights)
        g = nx.Graph(G.edges)
        g.add_nodes_from(range(1, n + 1))
        if nx.is_connected(g):
            return G


@st.composite
def graphs(draw, min_n=1, max_n=5, weights="symbolic"):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k], weights)


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
