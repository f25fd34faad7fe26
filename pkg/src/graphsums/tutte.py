"""Multivariate Tutte polynomial and the external activity polynomial.

``C_G`` is computed from spanning trees with externally active edges, as
the sum over connected spanning subgraphs, and as a signed sum over set
partitions of the vertices.
"""

from __future__ import annotations

from itertools import permutations
from math import factorial

from .errors import Disconnected, TooLarge
from .graph import _components_raw, edge_subsets, is_connected, monomial_of
from .matrix_tree import _vec, spanning_forests
from .ring import Poly, ring_add, ring_mul, ring_pow

__all__ = [
    "EdgeOrder",
    "SetPartition",
    "set_partitions",
    "tutte_multivariate",
    "ext_activity_tree_def",
    "ext_activity_subgraph_sum",
    "ext_activity_partition_formula",
    "ext_activity",
    "moebius_lemma_check",
    "free_term_check",
    "PARTITION_CAP",
]

PARTITION_CAP = 10
Q = Poly.var("q")


class EdgeOrder:
    """Ranks of the edges of ``G``; ``rank[k]`` is the position of ``G.edges[k]``."""

    def __init__(self, G, sequence=None):
        if sequence is None:
            sequence = list(G.edges)
        seq = [tuple(sorted(e)) for e in sequence]
        if sorted(seq) != sorted(G.edges):
            raise ValueError("edge order must list every edge of the graph exactly once")
        pos = {e: r for r, e in enumerate(seq)}
        self.sequence = tuple(seq)
        self.rank = [pos[e] for e in G.edges]

    @classmethod
    def from_permutation(cls, G, perm):
        """``perm`` lists 1-based indices into the lexicographic edge list."""
        perm = list(perm)
        if sorted(perm) != list(range(1, G.m + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{G.m}")
        return cls(G, [G.edges[p - 1] for p in perm])

    @classmethod
    def all_orders(cls, G):
        for seq in permutations(G.edges):
            yield cls(G, seq)


class SetPartition:
    """Blocks sorted by minimum element, each block sorted."""

    def __init__(self, blocks):
        blocks = [tuple(sorted(b)) for b in blocks if b]
        blocks.sort(key=lambda b: b[0])
        flat = [v for b in blocks for v in b]
        if len(flat) != len(set(flat)):
            raise ValueError("blocks overlap")
        self.blocks = tuple(blocks)

    @property
    def k(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return "|".join("".join(map(str, b)) for b in self.blocks)


def set_partitions(n, cap=PARTITION_CAP):
    """Partitions of ``1..n`` via restricted growth strings."""
    if n > cap:
        raise TooLarge(f"Bell({n}) partitions exceeds cap n <= {cap}")
    if n == 0:
        yield SetPartition([])
        return
    a = [0] * n

    def rec(i, top):
        if i == n:
            blocks = [[] for _ in range(top + 1)]
            for v, b in enumerate(a):
                blocks[b].append(v + 1)
            yield SetPartition(blocks)
            return
        for b in range(top + 2):
            a[i] = b
            yield from rec(i + 1, max(top, b))

    a[0] = 0
    yield from rec(1, 0)


def tutte_multivariate(G, q=Q):
    """``sum_F q^{k(F)} w(F)`` over spanning edge subsets ``F``."""
    total = 0
    for sub in edge_subsets(G):
        k = len(_components_raw(G.n, [(*G.edges[e], 1) for e in sub], True))
        total = ring_add(total, ring_mul(ring_pow(q, k), monomial_of(G, _vec(G, sub))))
    return total


def _require_connected(G):
    if not is_connected(G):
        raise Disconnected("the external activity polynomial is defined for connected graphs")


def _tree_path_edges(G, tree, a, b):
    """Edge indices on the tree path from ``a`` to ``b``."""
    adj = {}
    for e in tree:
        i, j = G.edges[e]
        adj.setdefault(i, []).append((j, e))
        adj.setdefault(j, []).append((i, e))
    stack = [(a, None, [])]
    while stack:
        v, parent, path = stack.pop()
        if v == b:
            return path
        for u, e in adj.get(v, []):
            if u != parent:
                stack.append((u, v, path + [e]))
    raise AssertionError("tree path not found")


def ext_activity_tree_def(G, order=None):
    """``sum_T w(T) prod_{e active} (w_e + 1)``; ``e`` is externally active
    for ``T`` when it is the smallest edge of the cycle it closes."""
    _require_connected(G)
    if order is None:
        order = EdgeOrder(G)
    rank = order.rank
    total = 0
    for tree, _ in spanning_forests(G, 1):
        inside = set(tree)
        term = monomial_of(G, _vec(G, tree))
        for e in range(G.m):
            if e in inside:
                continue
            path = _tree_path_edges(G, tree, *G.edges[e])
            if all(rank[e] < rank[f] for f in path):
                term = ring_mul(term, ring_add(G.weights[e], 1))
        total = ring_add(total, term)
    return total


def ext_activity_subgraph_sum(G):
    """Sum of ``w(F)`` over connected spanning subgraphs."""
    _require_connected(G)
    total = 0
    for sub in edge_subsets(G):
        if len(sub) < G.n - 1:
            continue
        if len(_components_raw(G.n, [(*G.edges[e], 1) for e in sub], True)) == 1:
            total = ring_add(total, monomial_of(G, _vec(G, sub)))
    return total


def ext_activity_partition_formula(G, cap=PARTITION_CAP):
    """``sum_P (-1)^{k-1} (k-1)! prod_{edges inside a block} (w_e + 1)``."""
    _require_connected(G)
    total = 0
    for P in set_partitions(G.n, cap):
        block = {v: b for b, blk in enumerate(P.blocks) for v in blk}
        term = (-1) ** (P.k - 1) * factorial(P.k - 1)
        for (i, j), w in zip(G.edges, G.weights):
            if block[i] == block[j]:
                term = ring_mul(term, ring_add(w, 1))
        total = ring_add(total, term)
    return total


METHODS = {
    "tree": ext_activity_tree_def,
    "subgraph": ext_activity_subgraph_sum,
    "partition": ext_activity_partition_formula,
}


def ext_activity(G, method="subgraph", order=None):
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}")
    if method == "tree":
        return ext_activity_tree_def(G, order)
    return METHODS[method](G)


def moebius_lemma_check(n, cap=PARTITION_CAP):
    """``sum_P (-1)^{k-1} prod (|P_i| - 1)!`` over partitions of ``1..n``; zero for n >= 2."""
    total = 0
    for P in set_partitions(n, cap):
        term = (-1) ** (P.k - 1)
        for b in P.blocks:
            term *= factorial(len(b) - 1)
        total += term
    return total


def free_term_check(G):
    """Coefficient of ``q^1`` in the Tutte polynomial against ``C_G``."""
    _require_connected(G)
    lhs = tutte_multivariate(G).coeff("q", 1)
    if lhs.is_constant():
        lhs = lhs.constant_term()
    return lhs, ext_activity_subgraph_sum(G)
