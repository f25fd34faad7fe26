import random

import pytest
from hypothesis import given, settings

from graphsums import complete_graph, path_graph, triangle
from graphsums.errors import Disconnected
from graphsums.graph import Graph, is_connected
from graphsums.linalg import PairSet, det, laplacian, minor
from graphsums.matrix_tree import (
    all_minors_check,
    j_admissible_forests,
    spanning_tree_sum,
    spanning_tree_sum_oracle,
)
from graphsums.ring import var

from conftest import graphs, random_graph

W12, W13, W23 = var("w_1_2"), var("w_1_3"), var("w_2_3")


def test_tree_sum_examples():
    assert spanning_tree_sum(triangle("ones")) == 3
    assert spanning_tree_sum(complete_graph(4, "ones")) == 16
    assert spanning_tree_sum(path_graph(2)) == W12


def test_tree_sum_rejects_disconnected():
    with pytest.raises(Disconnected):
        spanning_tree_sum(Graph.from_edges(3, [(1, 2)]))


def test_oracle_examples():
    assert spanning_tree_sum_oracle(triangle()) == W12 * W13 + W12 * W23 + W13 * W23
    assert spanning_tree_sum_oracle(path_graph(4)) == var("w_1_2") * var("w_2_3") * var("w_3_4")
    assert spanning_tree_sum_oracle(Graph.from_edges(3, [(1, 2)])) == 0


def test_admissible_forests_examples():
    G = path_graph(2)
    assert list(j_admissible_forests(G, [(1, 2)])) == [((0,), [0])]
    assert list(j_admissible_forests(G, [(1, 1), (2, 2)])) == [((), [0, 1])]
    assert len(list(j_admissible_forests(triangle(), [(1, 1)]))) == 3


def test_all_minors_examples():
    assert all_minors_check(path_graph(2), [(1, 2)]) == (W12, W12)
    lhs, rhs = all_minors_check(triangle(), [(1, 1)])
    assert lhs == rhs == spanning_tree_sum(triangle())


def test_all_minors_swapped_pair_value():
    # two components separating 1 from 2: {1,3}+{2} or {1}+{2,3}; tau and gamma
    # are both the transposition so every sign is +
    lhs, rhs = all_minors_check(triangle(), [(1, 2), (2, 1)])
    assert lhs == rhs == W13 + W23


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=6))
def test_every_principal_minor_agrees(G):
    L = laplacian(G)
    values = {det(minor(L, [(r, r)])) for r in range(1, G.n + 1)}
    assert len(values) == 1
    if is_connected(G):
        assert values.pop() == spanning_tree_sum_oracle(G)


def test_random_all_minors(rng):
    for _ in range(40):
        n = rng.randint(2, 6)
        G = random_graph(rng, n)
        m = rng.randint(1, min(3, n))
        J = PairSet(zip(rng.sample(range(1, n + 1), m), rng.sample(range(1, n + 1), m)))
        lhs, rhs = all_minors_check(G, J)
        assert lhs == rhs, (G, J)
