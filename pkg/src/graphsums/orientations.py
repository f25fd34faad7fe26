"""Orientations without sources and sinks, and the chromatic polynomial.

``d(G)`` is computed four ways: brute force over all orientations, an
inclusion-exclusion over vertex sets spanning bipartite subgraphs, the same
sum written with chromatic polynomials evaluated at 2, and a signed sum over
subgraphs ``(P, F)`` where ``F`` is an edge set inside the vertex set ``P``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .errors import IsolatedVertex, TooLarge
from .graph import DEFAULT_CAP_SIMPLE, Graph, _components_raw, enumerate_orientations, is_bipartite
from .ring import Poly, ring_add, ring_mul, ring_pow

__all__ = [
    "is_source_sink_free",
    "d_oracle",
    "count_source_sink_free",
    "d_bipartite_formula",
    "chromatic_polynomial",
    "chromatic_coefficients",
    "chromatic_via_subgraphs",
    "d_chromatic_formula",
    "d_subgraph_formula",
    "d_count",
    "METHODS",
]

CHROMATIC_CAP = 12


def is_source_sink_free(Q, vertices=None):
    """Every vertex (of ``vertices``, default ``1..n``) has an incoming and
    an outgoing arc."""
    if vertices is None:
        vertices = range(1, Q.n + 1)
    outs = {a for a, _ in Q.arcs}
    ins = {b for _, b in Q.arcs}
    return all(v in outs and v in ins for v in vertices)


def _require_no_isolated(G):
    iso = G.isolated_vertices()
    if iso:
        raise IsolatedVertex(f"vertices {iso} are isolated; d(G) needs every vertex on an edge")


def d_oracle(G, cap=DEFAULT_CAP_SIMPLE):
    _require_no_isolated(G)
    return sum(1 for Q in enumerate_orientations(G, cap) if is_source_sink_free(Q))


def count_source_sink_free(edges):
    """d of the graph spanned by ``edges`` (a list of pairs) on the vertices
    those edges touch.  The empty graph has exactly one (empty) orientation."""
    edges = sorted(set(edges))
    if not edges:
        return 1
    verts = sorted({v for e in edges for v in e})
    relabel = {v: k + 1 for k, v in enumerate(verts)}
    H = Graph.from_edges(len(verts), [(relabel[i], relabel[j]) for i, j in edges], "ones")
    return d_oracle(H)


def _mu(G, P):
    """Number of edges with both endpoints outside P."""
    return sum(1 for i, j in G.edges if i not in P and j not in P)


def _k(G, P):
    """Components of the subgraph induced on P (vertex set P)."""
    if not P:
        return 0
    items = [(i, j, 1) for i, j in G.edges if i in P and j in P]
    comps = _components_raw(G.n, items, True)
    return sum(1 for c in comps if c.vertices & P)


def _vertex_subsets(n):
    for m in range(n + 1):
        for P in combinations(range(1, n + 1), m):
            yield m, frozenset(P)


def d_bipartite_formula(G):
    _require_no_isolated(G)
    total = 0
    for m, P in _vertex_subsets(G.n):
        induced = G.induced(P)
        if P and not is_bipartite(induced)[0]:
            continue
        total += (-1) ** m * 2 ** (_mu(G, P) + _k(G, P))
    return total


# ---------------------------------------------------------------------------
# chromatic polynomial by deletion-contraction


def _poly_sub(a, b):
    out = [0] * max(len(a), len(b))
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


@lru_cache(maxsize=None)
def _chromatic(nverts, edges):
    """Coefficient list (index = power of lambda) for a simple graph with
    ``nverts`` vertices and ``edges`` a frozenset of frozenset pairs."""
    if not edges:
        return tuple([0] * nverts + [1])
    e = min(edges, key=sorted)
    a, b = sorted(e)
    deleted = edges - {e}
    # contract b into a; parallel edges collapse automatically in the set
    contracted = frozenset(
        frozenset(a if v == b else v for v in f) for f in deleted
    )
    return tuple(_poly_sub(_chromatic(nverts, deleted), _chromatic(nverts - 1, contracted)))


def chromatic_coefficients(F):
    """Chromatic polynomial of ``F`` on vertex set ``1..n`` as a coefficient list."""
    if F.n > CHROMATIC_CAP:
        raise TooLarge(f"chromatic polynomial on {F.n} vertices exceeds cap {CHROMATIC_CAP}")
    edges = frozenset(frozenset(e) for e in F.edges)
    return list(_chromatic(F.n, edges))


def chromatic_polynomial(F, lam=None, var="lambda"):
    """Number of proper colourings.  With ``lam=None`` the result is a
    polynomial in the variable ``var``; otherwise it is evaluated at ``lam``."""
    coeffs = chromatic_coefficients(F)
    if lam is None:
        x = Poly.var(var)
        out = 0
        for k, c in enumerate(coeffs):
            if c:
                out = ring_add(out, ring_mul(c, ring_pow(x, k)))
        return out
    out = 0
    for k, c in enumerate(coeffs):
        if c:
            out = ring_add(out, ring_mul(c, ring_pow(lam, k)))
    return out


def chromatic_via_subgraphs(F, q):
    """sum over spanning edge subsets F' of q^{k(F')} (-1)^{e(F')}."""
    total = 0
    for r in range(F.m + 1):
        for sub in combinations(F.edges, r):
            k = len(_components_raw(F.n, [(i, j, 1) for i, j in sub], True))
            total = ring_add(total, ring_mul((-1) ** r, ring_pow(q, k)))
    return total


def _chr_on(G, P):
    """chr of the subgraph induced on vertex set P, evaluated at 2."""
    if not P:
        return 1
    verts = sorted(P)
    relabel = {v: k + 1 for k, v in enumerate(verts)}
    H = Graph.from_edges(
        len(verts), [(relabel[i], relabel[j]) for i, j in G.edges if i in P and j in P], "ones"
    )
    return chromatic_polynomial(H, 2)


def d_chromatic_formula(G):
    _require_no_isolated(G)
    total = 0
    for m, P in _vertex_subsets(G.n):
        total += (-1) ** m * 2 ** _mu(G, P) * _chr_on(G, P)
    return total


def d_subgraph_formula(G):
    """Signed sum over subgraphs ``F = (P, E_F)`` with ``E_F`` inside ``P``.

    ``v(F) = |P|``, ``k(F)`` counts components on ``P`` (isolated vertices of
    ``P`` included) and ``mu(F)`` counts edges of ``G`` avoiding ``P``.
    """
    _require_no_isolated(G)
    total = 0
    for m, P in _vertex_subsets(G.n):
        inside = [e for e in G.edges if e[0] in P and e[1] in P]
        mu = _mu(G, P)
        for r in range(len(inside) + 1):
            for sub in combinations(inside, r):
                if P:
                    comps = _components_raw(G.n, [(i, j, 1) for i, j in sub], True)
                    k = sum(1 for c in comps if c.vertices & P)
                else:
                    k = 0
                chi = m - r
                total += 2 ** (mu + k) * (-1 if chi % 2 else 1)
    return total


METHODS = {
    "oracle": d_oracle,
    "bipartite": d_bipartite_formula,
    "chromatic": d_chromatic_formula,
    "subgraph": d_subgraph_formula,
}


def d_count(G, method="oracle"):
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}") from None
    return fn(G)
