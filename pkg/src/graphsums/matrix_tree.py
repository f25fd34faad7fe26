"""Spanning-tree sums from Laplacian minors, with enumeration oracles.

Covers the classical theorem (every principal minor of the Laplacian is
the weighted spanning-tree sum) and the all-minors version for an
arbitrary component-disjoint set of deleted rows and columns.
"""

from __future__ import annotations

from .errors import Disconnected
from .graph import _components_raw, edge_subsets, is_connected, monomial_of
from .linalg import PairSet, compose, det, laplacian, minor, perm_sign
from .ring import ring_add, ring_mul

__all__ = [
    "spanning_tree_sum",
    "spanning_tree_sum_oracle",
    "spanning_forests",
    "j_admissible_forests",
    "all_minors_check",
]


def spanning_tree_sum(G, root=1):
    """Weighted spanning-tree sum as the principal minor at ``root``."""
    if G.n < 2:
        raise ValueError("need at least two vertices")
    if not is_connected(G):
        raise Disconnected(f"{G} is not connected; it has no spanning tree")
    return det(minor(laplacian(G), PairSet([(root, root)])))


def spanning_forests(G, k):
    """Edge-index tuples of spanning forests of ``G`` with exactly ``k``
    components (isolated vertices count)."""
    size = G.n - k
    for sub in edge_subsets(G, size=size):
        items = [(*G.edges[e], 1) for e in sub]
        comps = _components_raw(G.n, items, True)
        # n - k edges and k components forces acyclicity
        if len(comps) == k:
            yield sub, comps


def spanning_tree_sum_oracle(G):
    total = 0
    for sub, _ in spanning_forests(G, 1):
        total = ring_add(total, monomial_of(G, _vec(G, sub)))
    return total


def _vec(G, sub):
    v = [0] * G.m
    for e in sub:
        v[e] = 1
    return tuple(v)


def j_admissible_forests(G, J):
    """Yield ``(edge indices, gamma)`` for every J-admissible forest.

    ``gamma`` is 0-based: ``i_p`` and ``j_{gamma[p]}`` share a component,
    with pairs numbered in increasing order of ``i``.
    """
    if not isinstance(J, PairSet):
        J = PairSet(J)
    firsts, seconds = J.firsts, J.seconds
    for sub, comps in spanning_forests(G, J.m):
        where = {}
        for c, comp in enumerate(comps):
            for v in comp.vertices:
                where[v] = c
        i_comp = [where[i] for i in firsts]
        j_comp = [where[j] for j in seconds]
        if len(set(i_comp)) != J.m or len(set(j_comp)) != J.m:
            continue
        by_comp = {c: q for q, c in enumerate(j_comp)}
        gamma = [by_comp[c] for c in i_comp]
        yield sub, gamma


def all_minors_check(G, J):
    """Return ``(lhs, rhs)``: the signed minor ``(-1)^{sum J} det L(J)`` and
    the signed sum of ``w(F)`` over J-admissible forests."""
    if not isinstance(J, PairSet):
        J = PairSet(J)
    lhs = det(minor(laplacian(G), J))
    if J.total % 2:
        lhs = ring_mul(-1, lhs)
    tau = J.tau()
    rhs = 0
    for sub, gamma in j_admissible_forests(G, J):
        s = perm_sign(compose(tau, gamma))
        rhs = ring_add(rhs, ring_mul(s, monomial_of(G, _vec(G, sub))))
    return lhs, rhs
