"""Graphs, multi-subgraphs, digraphs and the structural routines the
identity checks are built on.

Vertices are always ``1..n``.  A subgraph is an edge selection; whether an
isolated vertex counts as a connected component is chosen per call with
``spanning=True`` (every vertex of ``1..n`` is a component candidate) or
``spanning=False`` (only vertices incident to a selected edge).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .errors import TooLarge
from .ring import Poly, edge_var, ring_mul

__all__ = [
    "Graph",
    "MultiSubgraph",
    "Digraph",
    "Component",
    "components",
    "num_components",
    "two_core",
    "core_of",
    "is_bipartite",
    "is_connected",
    "enumerate_multisubgraphs",
    "enumerate_orientations",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "empty_graph",
    "triangle",
    "bowtie",
    "k4_minus_edge",
    "DEFAULT_CAP_SIMPLE",
    "DEFAULT_CAP_DOUBLED",
]

DEFAULT_CAP_SIMPLE = 20
DEFAULT_CAP_DOUBLED = 13


def _pair(i, j):
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Loop-free simple graph on ``1..n`` with one weight per edge.

    ``edges`` is sorted and holds pairs ``(i, j)`` with ``i < j``;
    ``weights[k]`` belongs to ``edges[k]``.  ``laplacian_shift`` holds
    ``(i, j, delta)`` corrections added to the Laplacian; it exists only to
    build deliberately inconsistent fixtures and is empty otherwise.
    """

    n: int
    edges: tuple
    weights: tuple
    laplacian_shift: tuple = ()
    _index: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if len(self.weights) != len(self.edges):
            raise ValueError("every edge needs exactly one weight")
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge ({i}, {j}) is not a sorted pair inside 1..{self.n}")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
        if list(self.edges) != sorted(self.edges):
            raise ValueError("edges must be sorted")
        object.__setattr__(self, "_index", {e: k for k, e in enumerate(self.edges)})

    @classmethod
    def from_edges(cls, n, edges, weights="symbolic", prefix="w"):
        """Build a graph; ``weights`` is ``"symbolic"``, ``"ones"`` or a
        mapping from pairs (either order) to ring elements."""
        edges = list(edges)
        pairs = sorted({_pair(i, j) for i, j in edges})
        if len(pairs) != len(edges):
            raise ValueError("duplicate edges")
        if weights == "symbolic":
            ws = tuple(edge_var(i, j, prefix) for i, j in pairs)
        elif weights == "ones":
            ws = (1,) * len(pairs)
        else:
            lookup = {_pair(i, j): w for (i, j), w in dict(weights).items()}
            ws = tuple(lookup[p] for p in pairs)
        return cls(n, tuple(pairs), ws)

    # -- basic queries ----------------------------------------------------

    @property
    def m(self):
        return len(self.edges)

    def index(self, i, j):
        return self._index[_pair(i, j)]

    def has_edge(self, i, j):
        return _pair(i, j) in self._index

    def weight(self, i, j):
        """Weight of {i, j}; 0 for non-edges."""
        k = self._index.get(_pair(i, j))
        return 0 if k is None else self.weights[k]

    def neighbors(self, v):
        return sorted({j if i == v else i for i, j in self.edges if v in (i, j)})

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def isolated_vertices(self):
        touched = {v for e in self.edges for v in e}
        return [v for v in range(1, self.n + 1) if v not in touched]

    def with_weights(self, weights):
        G = Graph.from_edges(self.n, self.edges, weights)
        return Graph(G.n, G.edges, G.weights, self.laplacian_shift)

    def all_ones(self):
        return Graph(self.n, self.edges, (1,) * self.m, self.laplacian_shift)

    def subgraph(self, keep):
        """Spanning subgraph on the edges in ``keep`` (weights retained)."""
        keep = {_pair(i, j) for i, j in keep}
        idx = [k for k, e in enumerate(self.edges) if e in keep]
        return Graph(self.n, tuple(self.edges[k] for k in idx), tuple(self.weights[k] for k in idx))

    def without(self, drop):
        drop = {_pair(i, j) for i, j in drop}
        return self.subgraph([e for e in self.edges if e not in drop])

    def induced(self, vertices):
        """Edges of G with both endpoints in ``vertices`` (vertex set unchanged)."""
        vs = set(vertices)
        return self.subgraph([e for e in self.edges if e[0] in vs and e[1] in vs])

    def full(self):
        return MultiSubgraph(self, (1,) * self.m)

    def __str__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class MultiSubgraph:
    """Edge multiplicities (0, 1 or 2) over the edges of ``parent``."""

    parent: Graph
    mult: tuple

    @classmethod
    def from_mult(cls, parent, mult):
        """``mult`` maps pairs (either order) to multiplicities."""
        vec = [0] * parent.m
        for (i, j), k in dict(mult).items():
            if k:
                vec[parent.index(i, j)] = k
        return cls(parent, tuple(vec))

    @property
    def n(self):
        return self.parent.n

    def items(self):
        """(edge, multiplicity) for every present edge."""
        return [(e, k) for e, k in zip(self.parent.edges, self.mult) if k]

    def as_dict(self):
        return dict(self.items())

    def num_edges(self):
        return sum(self.mult)

    def support(self):
        return sorted({v for e, _ in self.items() for v in e})

    def weight(self):
        w = 1
        for k, m in enumerate(self.mult):
            for _ in range(m):
                w = ring_mul(w, self.parent.weights[k])
        return w

    def is_empty(self):
        return not any(self.mult)

    def __str__(self):
        parts = [f"{i}-{j}" + ("x2" if k == 2 else "") for (i, j), k in self.items()]
        return "{" + ", ".join(parts) + "}"


@dataclass(frozen=True)
class Digraph:
    """Set of arcs ``(i, j)`` on ``1..n``; loops ``(i, i)`` allowed."""

    n: int
    arcs: frozenset

    def out_degree(self, v):
        return sum(1 for a, _ in self.arcs if a == v)

    def in_degree(self, v):
        return sum(1 for _, b in self.arcs if b == v)

    def vertices(self):
        return sorted({v for a in self.arcs for v in a})

    def underlying(self):
        """The undirected multigraph [Q] as ``{pair: multiplicity}``; loops map to ``(i, i)``."""
        out = {}
        for i, j in self.arcs:
            key = (i, i) if i == j else _pair(i, j)
            out[key] = out.get(key, 0) + 1
        return out


@dataclass(frozen=True)
class Component:
    vertices: frozenset
    v: int
    e: int

    @property
    def chi(self):
        return self.v - self.e


# ---------------------------------------------------------------------------
# structure


def _edge_items(F):
    """Normalise Graph / MultiSubgraph / dict / iterable into (n, [(i, j, m)])."""
    if isinstance(F, MultiSubgraph):
        return F.n, [(i, j, k) for (i, j), k in F.items()]
    if isinstance(F, Graph):
        return F.n, [(i, j, 1) for i, j in F.edges]
    raise TypeError(f"expected Graph or MultiSubgraph, got {type(F).__name__}")


def _components_raw(n, items, spanning):
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touched = set()
    for i, j, _ in items:
        touched.add(i)
        touched.add(j)
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    verts = range(1, n + 1) if spanning else sorted(touched)
    groups = {}
    for v in verts:
        groups.setdefault(find(v), set()).add(v)
    edges = {}
    for i, j, k in items:
        r = find(i)
        edges[r] = edges.get(r, 0) + k
    out = [Component(frozenset(vs), len(vs), edges.get(r, 0)) for r, vs in groups.items()]
    out.sort(key=lambda c: min(c.vertices))
    return out


def components(F, spanning=True):
    """Connected components with vertex count, edge count (with
    multiplicity) and Euler characteristic ``v - e``."""
    n, items = _edge_items(F)
    return _components_raw(n, items, spanning)


def num_components(F, spanning=True):
    return len(components(F, spanning))


def is_connected(G):
    return G.n <= 1 or len(components(G, spanning=True)) == 1


def core_of(items):
    """2-core of a loop-free multigraph given as ``{pair: multiplicity}``.

    Vertices of degree at most one (a doubled edge contributes two) are
    deleted until none remain.
    """
    mult = {e: k for e, k in items.items() if k}
    deg = {}
    for (i, j), k in mult.items():
        deg[i] = deg.get(i, 0) + k
        deg[j] = deg.get(j, 0) + k
    stack = [v for v, d in deg.items() if d <= 1]
    while stack:
        v = stack.pop()
        if deg.get(v, 0) > 1 or v not in deg:
            continue
        del deg[v]
        for e in [e for e in mult if v in e]:
            k = mult.pop(e)
            u = e[0] if e[1] == v else e[1]
            if u in deg:
                deg[u] -= k
                if deg[u] <= 1:
                    stack.append(u)
    return mult


def two_core(F):
    """Maximal sub-multigraph with every vertex of degree >= 2."""
    core = core_of(F.as_dict())
    return MultiSubgraph.from_mult(F.parent, core)


def is_bipartite(F):
    """Return ``(True, colouring)`` or ``(False, None)``.

    The colouring maps every vertex of ``1..n`` to 0 or 1.
    """
    n, items = _edge_items(F)
    adj = {v: [] for v in range(1, n + 1)}
    for i, j, _ in items:
        adj[i].append(j)
        adj[j].append(i)
    colour = {}
    for s in range(1, n + 1):
        if s in colour:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return False, None
    return True, colour


# ---------------------------------------------------------------------------
# enumeration


def _mult_vectors(m, max_mult, total):
    if total is None:
        vec = [0] * m
        # odometer over {0..max_mult}^m
        while True:
            yield tuple(vec)
            k = 0
            while k < m and vec[k] == max_mult:
                vec[k] = 0
                k += 1
            if k == m:
                return
            vec[k] += 1
    else:
        vec = [0] * m

        def rec(pos, left):
            if pos == m:
                if left == 0:
                    yield tuple(vec)
                return
            room = max_mult * (m - pos - 1)
            for k in range(min(max_mult, left) + 1):
                if left - k > room:
                    continue
                vec[pos] = k
                yield from rec(pos + 1, left - k)
            vec[pos] = 0

        yield from rec(0, total)


def enumerate_multisubgraphs(G, max_mult=1, cap=None, total=None):
    """Every multiplicity assignment ``edges -> {0..max_mult}``, each once.

    With ``total`` set, only assignments whose multiplicities sum to
    ``total`` are produced (pruned, not filtered afterwards).
    """
    if max_mult not in (1, 2):
        raise ValueError("max_mult must be 1 or 2")
    if cap is None:
        cap = DEFAULT_CAP_SIMPLE if max_mult == 1 else DEFAULT_CAP_DOUBLED
    if G.m > cap:
        raise TooLarge(f"{G.m} edges exceeds the enumeration cap of {cap}")
    for vec in _mult_vectors(G.m, max_mult, total):
        yield MultiSubgraph(G, vec)


def edge_subsets(G, size=None, cap=DEFAULT_CAP_SIMPLE):
    """Plain edge subsets as tuples of edge indices (fast path for oracles)."""
    if G.m > cap:
        raise TooLarge(f"{G.m} edges exceeds the enumeration cap of {cap}")
    sizes = range(G.m + 1) if size is None else [size]
    for s in sizes:
        if 0 <= s <= G.m:
            yield from combinations(range(G.m), s)


def enumerate_orientations(G, cap=DEFAULT_CAP_SIMPLE):
    """All ``2**e(G)`` orientations of the edges of ``G``."""
    if G.m > cap:
        raise TooLarge(f"{G.m} edges exceeds the enumeration cap of {cap}")
    for mask in range(1 << G.m):
        arcs = frozenset((i, j) if not (mask >> k) & 1 else (j, i) for k, (i, j) in enumerate(G.edges))
        yield Digraph(G.n, arcs)


# ---------------------------------------------------------------------------
# named graphs


def empty_graph(n):
    return Graph(n, (), ())


def complete_graph(n, weights="symbolic"):
    return Graph.from_edges(n, combinations(range(1, n + 1), 2), weights)


def cycle_graph(n, weights="symbolic"):
    return Graph.from_edges(n, [(k, k % n + 1) for k in range(1, n + 1)], weights)


def path_graph(n, weights="symbolic"):
    return Graph.from_edges(n, [(k, k + 1) for k in range(1, n)], weights)


def triangle(weights="symbolic"):
    return complete_graph(3, weights)


def bowtie(weights="symbolic"):
    """Two triangles sharing vertex 3."""
    return Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)], weights)


def k4_minus_edge(weights="symbolic"):
    return Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)], weights)


def symbolic_weight(i, j):
    return edge_var(i, j)


def monomial_of(G, mult):
    """w(F) for a multiplicity vector over ``G.edges``."""
    w = 1
    names = []
    for k, m in enumerate(mult):
        if not m:
            continue
        wk = G.weights[k]
        if isinstance(wk, Poly) and len(wk.terms) == 1 and next(iter(wk.terms.values())) == 1:
            names.extend(next(iter(wk.terms)) * m)
        else:
            for _ in range(m):
                w = ring_mul(w, wk)
    if names:
        w = ring_mul(w, Poly.monomial(names))
    return w
