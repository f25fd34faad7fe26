import random

import pytest
from hypothesis import given, settings, strategies as st

from graphsums import complete_graph, path_graph, triangle
from graphsums.errors import BadPairSet, TooLarge
from graphsums.graph import Graph
from graphsums.linalg import (
    PairSet,
    cycle_type,
    cycle_type_buckets,
    det,
    det_bareiss,
    det_expand,
    f_det,
    identity,
    laplacian,
    minor,
    rank,
    sign_f,
    tau_sign,
)
from graphsums.ring import var, ring_add

from conftest import graphs

int_matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)
)


def test_laplacian_of_edge():
    w = var("w_1_2")
    assert laplacian(path_graph(2)) == [[w, -w], [-w, w]]


def test_laplacian_examples():
    assert laplacian(Graph.from_edges(2, [])) == [[0, 0], [0, 0]]
    assert laplacian(triangle())[0][0] == var("w_1_2") + var("w_1_3")


def test_det_examples():
    assert det(identity(3)) == 1
    assert det(laplacian(path_graph(2))) == 0
    expected = var("w_1_2") * var("w_1_3") + var("w_1_2") * var("w_2_3") + var("w_1_3") * var("w_2_3")
    assert det(minor(laplacian(triangle()), [(1, 1)])) == expected


def test_det_cap():
    with pytest.raises(TooLarge):
        det(laplacian(complete_graph(13)))


def test_minor_examples():
    M = [[1, 2], [3, 4]]
    assert minor(M, []) == M
    assert minor(M, [(1, 2)]) == [[3]]
    N = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    assert minor(N, [(1, 1), (2, 2)]) == [[9]]


def test_minor_rejects_non_disjoint_sets():
    with pytest.raises(BadPairSet):
        minor(identity(3), [(1, 2), (1, 3)])


def test_tau_sign_examples():
    assert tau_sign([(1, 2)]) == 1
    assert tau_sign([(1, 3), (2, 1)]) == -1
    assert tau_sign([(1, 1), (2, 2), (3, 3)]) == 1


def test_pairset_parse():
    J = PairSet.parse("3:1,1:2")
    assert J.pairs == ((1, 2), (3, 1)) and J.total == 7


def test_f_det_examples():
    assert f_det(identity(2), lambda ct: 1) == 1
    L = laplacian(triangle())
    tau3 = lambda ct: -ct.sign * ct[3]
    assert f_det(L, tau3) == 2 * var("w_1_2") * var("w_1_3") * var("w_2_3")


def test_cycle_type():
    ct = cycle_type([1, 0, 3, 4, 2])
    assert ct.as_dict() == {2: 1, 3: 1} and ct.sign == -1


def test_rank():
    assert rank([(1, -1), (1, 1)]) == 2
    assert rank([(1, -1, 0), (1, 0, -1), (0, 1, -1)]) == 2
    assert rank([]) == 0


@settings(max_examples=80, deadline=None)
@given(int_matrices)
def test_bareiss_matches_expansion(M):
    assert det_bareiss(M) == det_expand(M)


@settings(max_examples=40, deadline=None)
@given(int_matrices.filter(lambda M: len(M) <= 5))
def test_f_det_with_sign_is_det(M):
    assert f_det(M, sign_f) == det_bareiss(M)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_laplacian_is_singular_with_zero_row_sums(G):
    L = laplacian(G)
    assert det(L) == 0
    for row in L:
        total = 0
        for x in row:
            total = ring_add(total, x)
        assert total == 0
