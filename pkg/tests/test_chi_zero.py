import itertools

import pytest
from hypothesis import given, settings

from graphsums import Graph, cycle_graph, path_graph, triangle
from graphsums.chi_zero import (
    T,
    altsum_check,
    chi_zero_connected_sum,
    chi_zero_oracle,
    component_disjoint_sets,
    genfun_check,
    genfun_printed,
    given_cycle_check,
    given_cycle_oracle,
    mu,
    mu_printed,
    one_cycle_oracle,
    one_cycle_sum,
    q_m,
    tau,
    tau_printed,
)
from graphsums.linalg import CycleType, f_det, laplacian
from graphsums.ring import var

from conftest import atlas_graphs, graphs, random_graph

W12, W13, W23 = var("w_1_2"), var("w_1_3"), var("w_2_3")
WT = W12 * W13 * W23


def test_one_cycle_examples():
    assert one_cycle_sum(triangle(), 3) == WT
    assert one_cycle_sum(cycle_graph(4), 3) == 0
    # a doubled edge plus one edge reaching the third vertex
    expected = W12 ** 2 * (W13 + W23) + W13 ** 2 * (W12 + W23) + W23 ** 2 * (W12 + W13)
    assert one_cycle_sum(triangle(), 2) == expected == one_cycle_oracle(triangle(), 2)


def test_chi_zero_examples():
    assert chi_zero_connected_sum(triangle()) == WT
    assert chi_zero_connected_sum(path_graph(4)) == 0
    assert chi_zero_connected_sum(cycle_graph(4, "ones")) == 1
    # with doubled edges: the cycle plus 4 doubled edges times 3 spanning
    # completions each
    assert chi_zero_connected_sum(cycle_graph(4, "ones"), doubled=True) == 13


def test_printed_mu_differs_by_parity_of_n():
    for n in range(2, 7):
        for counts in _cycle_types(n):
            ct = CycleType(n, counts)
            assert mu_printed(ct) == (-1) ** (n + 1) * mu(doubled=True)(ct)


def test_printed_tau_sign_flips_odd_graphs():
    L = laplacian(triangle())
    assert f_det(L, tau_printed(3)) == -2 * WT
    assert f_det(L, tau(3)) == 2 * WT


def _cycle_types(n):
    for counts in itertools.product(*[range(n // s + 1) for s in range(1, n + 1)]):
        if sum(s * k for s, k in zip(range(1, n + 1), counts)) == n:
            yield (0,) + counts


def test_given_cycle_examples():
    assert given_cycle_check(triangle(), [(1, 2)]) == (-WT, -WT)
    assert given_cycle_check(path_graph(2), [(1, 2)]) == (0, 0)
    assert given_cycle_check(path_graph(2), [(1, 2), (2, 1)]) == (-(W12 ** 2), -(W12 ** 2))
    lhs, rhs = given_cycle_check(cycle_graph(4), [(1, 2), (3, 4)])
    assert lhs == rhs == given_cycle_oracle(cycle_graph(4), [(1, 2), (3, 4)])


def test_given_cycle_direction_matters():
    # J edges pointing opposite ways around the 4-cycle cannot share it
    G = cycle_graph(4)
    assert given_cycle_check(G, [(1, 2), (4, 3)]) == (0, 0)


def test_q_m_examples():
    assert q_m(triangle(), 1) == 6 * WT
    assert q_m(triangle(), 1, signed=False) == -2 * WT
    tree = path_graph(4)
    assert all(q_m(tree, m, doubled=False) == 0 for m in range(1, 5))
    # both orientations of one tree edge close a 2-cycle
    assert q_m(tree, 2) != 0
    assert q_m(triangle(), 4) == 0


def test_genfun_examples():
    lhs, rhs = genfun_check(triangle())
    assert lhs == rhs
    assert rhs.coeff("t", 1) == -6 * WT
    assert genfun_check(path_graph(4), doubled=False) == (0, 0)
    lhs, rhs = genfun_check(path_graph(4))
    assert lhs == rhs != 0
    two = Graph.from_edges(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])
    lhs, rhs = genfun_check(two)
    assert lhs == rhs
    # both triangles as cycles: k = 2 and two factors 2((1+t)^3 - 1)
    cubic = 2 * ((1 + T) ** 3 - 1)
    assert rhs.coeff("t", 6) == (cubic * cubic).coeff("t", 6) * two.full().weight()


def test_printed_genfun_fails_on_triangle():
    lhs, rhs = genfun_printed(triangle())
    assert lhs.coeff("t", 1) == -2 * WT
    assert rhs.coeff("t", 1) == -3 * WT


def test_altsum_examples():
    assert altsum_check(triangle("ones")) == (-4, -4)


def test_small_graphs_exhaustive():
    for G in atlas_graphs(max_n=4, min_n=2):
        for s in range(2, G.n + 1):
            assert one_cycle_sum(G, s) == one_cycle_oracle(G, s)
        for d in (False, True):
            assert chi_zero_connected_sum(G, d) == chi_zero_oracle(G, d)
        for d in (False, True):
            lhs, rhs = genfun_check(G, doubled=d)
            assert lhs == rhs


def test_chi_zero_is_sum_of_one_cycle_sums():
    for G in atlas_graphs(max_n=5, min_n=3, connected=True)[:12]:
        total = 0
        for s in range(3, G.n + 1):
            total = total + one_cycle_sum(G, s)
        assert chi_zero_connected_sum(G) == total
        assert chi_zero_connected_sum(G, doubled=True) == total + one_cycle_sum(G, 2)


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=2, max_n=5))
def test_given_cycle_random(G):
    for m in (1, 2):
        for J in list(component_disjoint_sets(G, m))[:6]:
            lhs, rhs = given_cycle_check(G, J)
            assert lhs == rhs == given_cycle_oracle(G, J)


@settings(max_examples=20, deadline=None)
@given(graphs(min_n=2, max_n=5))
def test_altsum_random(G):
    lhs, rhs = altsum_check(G)
    assert lhs == rhs
