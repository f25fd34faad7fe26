"""Unicyclic subgraphs: f-determinant formulas, the fixed-cycle minor
identity and the generating function of the ``Q_m``.

Subgraphs are spanning.  A doubled edge counts as a cycle of length 2.
Polynomials in ``t`` use the ring variable ``"t"``.
"""

from __future__ import annotations

from itertools import combinations

from .graph import _components_raw, core_of, enumerate_multisubgraphs, monomial_of
from .linalg import FDET_CAP, PairSet, det, f_det, laplacian, minor, tau_sign
from .matrix_tree import j_admissible_forests, _vec
from .ring import Poly, ring_add, ring_mul, ring_pow

__all__ = [
    "T",
    "tau",
    "mu",
    "tau_printed",
    "mu_printed",
    "one_cycle_sum",
    "one_cycle_oracle",
    "chi_zero_connected_sum",
    "chi_zero_oracle",
    "given_cycle_check",
    "given_cycle_oracle",
    "component_disjoint_sets",
    "q_m",
    "genfun_check",
    "genfun_printed",
    "altsum_check",
    "unicyclic_spanning",
]

T = Poly.var("t")


def _sgn(k):
    return -1 if k % 2 else 1


# ---------------------------------------------------------------------------
# cycle-type functions


def tau(s):
    """``tau_s(ct) = -sign(ct) * k_s``."""

    def f(ct):
        return -ct.sign * ct[s]

    return f


def mu(doubled=False):
    """``-sign(ct) * (2 k_2 + k_3 + ... + k_n)``; with ``doubled=False`` the
    ``2 k_2`` term is dropped so only simple cycles are counted."""

    def f(ct):
        total = sum(ct[s] for s in range(3, ct.n + 1))
        if doubled:
            total += 2 * ct[2]
        return -ct.sign * total

    return f


def tau_printed(s):
    """Sign ``(-1)^{n + 2k_2 + ... + n k_n} = (-1)^{k_1}`` as printed."""

    def f(ct):
        return _sgn(ct[1]) * ct[s]

    return f


def mu_printed(ct):
    """Sign ``(-1)^{n + k_2 + 2k_3 + ... + (n-1)k_n}`` with ``2k_2 + k_3 + ...``."""
    e = ct.n + sum((s - 1) * ct[s] for s in range(2, ct.n + 1))
    return _sgn(e) * (2 * ct[2] + sum(ct[s] for s in range(3, ct.n + 1)))


def _half(x):
    return x.exact_div(2) if isinstance(x, Poly) else _exact_half(x)


def _exact_half(x):
    from .errors import NonIntegerResult

    if x % 2:
        raise NonIntegerResult(f"{x} is odd")
    return x // 2


# ---------------------------------------------------------------------------
# oracles on unicyclic multi-subgraphs


def _unicyclic_connected(G, max_mult):
    """Yield ``(mult, cycle length)`` for connected spanning multi-subgraphs
    with exactly one cycle (``e = n``)."""
    edges = G.edges
    for F in enumerate_multisubgraphs(G, max_mult=max_mult, total=G.n):
        mult = F.mult
        items = [(*edges[k], m) for k, m in enumerate(mult) if m]
        if len(_components_raw(G.n, items, True)) != 1:
            continue
        core = core_of({edges[k]: m for k, m in enumerate(mult) if m})
        yield mult, sum(core.values())


def one_cycle_oracle(G, s):
    total = 0
    for mult, length in _unicyclic_connected(G, 2 if s == 2 else 1):
        if length == s:
            total = ring_add(total, monomial_of(G, mult))
    return total


def one_cycle_sum(G, s, cap=FDET_CAP, buckets=None):
    """Sum of ``w(F)`` over connected spanning ``F`` with one cycle, of length
    ``s`` (a doubled edge when ``s = 2``)."""
    if s < 2:
        raise ValueError("cycle length must be at least 2")
    val = f_det(laplacian(G), tau(s), cap, buckets)
    return val if s == 2 else _half(val)


def chi_zero_oracle(G, doubled=False):
    total = 0
    for mult, _ in _unicyclic_connected(G, 2 if doubled else 1):
        total = ring_add(total, monomial_of(G, mult))
    return total


def chi_zero_connected_sum(G, doubled=False, cap=FDET_CAP, buckets=None):
    """Sum over connected spanning subgraphs with Euler characteristic 0.
    ``doubled=True`` also admits doubled edges as 2-cycles."""
    return _half(f_det(laplacian(G), mu(doubled), cap, buckets))


# ---------------------------------------------------------------------------
# fixed cycle edges


def _minus_j(G, J):
    drop = {(min(i, j), max(i, j)) for i, j in J}
    return G.without(drop)


def _w_of(G, J):
    out = 1
    for i, j in J:
        out = ring_mul(out, G.weight(i, j))
    return out


def _signed_minor(G, J):
    """``eps(tau_J) w(J) det L_{G-J}(J)``; zero if a pair of J is not an edge."""
    wj = _w_of(G, J)
    if wj == 0:
        return 0
    d = det(minor(laplacian(_minus_j(G, J)), J))
    return ring_mul(tau_sign(J), ring_mul(wj, d))


def given_cycle_check(G, J):
    """``lhs = (-1)^{sum J + m} eps(tau_J) w(J) det(L_{G-J}(J))``;
    ``rhs = sum (-1)^{k(H)} w(H)`` over ``H = F + J``, ``F`` a J-admissible
    forest of ``G - J``."""
    if not isinstance(J, PairSet):
        J = PairSet(J)
    lhs = ring_mul(_sgn(J.total + J.m), _signed_minor(G, J))
    wj = _w_of(G, J)
    rhs = 0
    if wj != 0:
        GJ = _minus_j(G, J)
        for sub, _ in j_admissible_forests(GJ, J):
            items = [(*GJ.edges[e], 1) for e in sub] + [(i, j, 1) for i, j in J]
            k = len(_components_raw(G.n, items, True))
            rhs = ring_add(rhs, ring_mul(_sgn(k) * wj, monomial_of(GJ, _vec(GJ, sub))))
    return lhs, rhs


def _cycle_walk(adj, start):
    """Vertices of the unique cycle through ``start`` in order (simple case)."""
    order = [start]
    prev, cur = None, start
    while True:
        nxt = [u for u in adj[cur] if u != prev]
        u = nxt[0]
        if u == start:
            return order
        order.append(u)
        prev, cur = cur, u


def given_cycle_oracle(G, J):
    """Enumerate ``H = S + J`` directly (``S`` any edge set of ``G - J``) and
    keep those where every component is unicyclic, every cycle carries a J
    edge, every J edge lies on a cycle and the J edges of a cycle all point
    the same way around it.  Returns ``sum (-1)^{k(H)} w(H)``."""
    if not isinstance(J, PairSet):
        J = PairSet(J)
    wj = _w_of(G, J)
    if wj == 0:
        return 0
    GJ = _minus_j(G, J)
    n = G.n
    jpairs = list(J)
    total = 0
    if n < J.m:
        return 0
    # every component unicyclic forces e(H) = n
    for sub in combinations(range(GJ.m), n - J.m):
        mult = {}
        for e in sub:
            mult[GJ.edges[e]] = 1
        for i, j in jpairs:
            p = (min(i, j), max(i, j))
            mult[p] = mult.get(p, 0) + 1
        items = [(i, j, k) for (i, j), k in mult.items()]
        comps = _components_raw(n, items, True)
        if any(c.chi != 0 for c in comps):
            continue
        if not _cycles_ok(core_of(mult), jpairs, comps):
            continue
        total = ring_add(total, ring_mul(_sgn(len(comps)) * wj, monomial_of(GJ, _vec(GJ, sub))))
    return total


def _cycles_ok(core, jpairs, comps):
    for i, j in jpairs:
        if (min(i, j), max(i, j)) not in core:
            return False
    adj = {}
    for (a, b), k in core.items():
        if k == 2:
            continue
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    jset = set(jpairs)
    for c in comps:
        cyc_doubled = [p for p, k in core.items() if k == 2 and p[0] in c.vertices]
        if cyc_doubled:
            a, b = cyc_doubled[0]
            if not ((a, b) in jset and (b, a) in jset):
                return False
            continue
        start = min(v for v in c.vertices if v in adj)
        order = _cycle_walk(adj, start)
        L = len(order)
        fwd = back = 0
        for k in range(L):
            a, b = order[k], order[(k + 1) % L]
            if (a, b) in jset:
                fwd += 1
            if (b, a) in jset:
                back += 1
        if fwd + back == 0 or (fwd and back):
            return False
    return True


# ---------------------------------------------------------------------------
# generating function


def component_disjoint_sets(G, m, doubled=True):
    """Every component-disjoint J of ``m`` ordered pairs, each an edge of G.
    ``doubled=False`` skips J holding both ``(i, j)`` and ``(j, i)``."""
    arcs = sorted([(i, j) for i, j in G.edges] + [(j, i) for i, j in G.edges])
    for combo in combinations(arcs, m):
        if len({a for a, _ in combo}) == m and len({b for _, b in combo}) == m:
            if not doubled and len({(min(a, b), max(a, b)) for a, b in combo}) < m:
                continue
            yield PairSet(combo)


def q_m(G, m, signed=True, doubled=True):
    """``Q_m``: with ``signed=True`` each term carries ``(-1)^{sum J} eps(tau_J)``
    (the normalisation under which the generating-function identity holds);
    ``signed=False`` is the bare ``sum w(J) det L_{G-J}(J)``.  With
    ``doubled=False`` J never holds both orientations of one edge."""
    if m == 0:
        return 1
    total = 0
    for J in component_disjoint_sets(G, m, doubled):
        if signed:
            term = ring_mul(_sgn(J.total), _signed_minor(G, J))
        else:
            term = ring_mul(_w_of(G, J), det(minor(laplacian(_minus_j(G, J)), J)))
        total = ring_add(total, term)
    return total


def unicyclic_spanning(G):
    """Yield ``(mult, cycle lengths)`` for spanning multi-subgraphs whose every
    component has exactly one cycle (doubled edges count as 2-cycles)."""
    edges = G.edges
    for F in enumerate_multisubgraphs(G, max_mult=2, total=G.n):
        mult = F.mult
        items = [(*edges[k], m) for k, m in enumerate(mult) if m]
        comps = _components_raw(G.n, items, True)
        if any(c.chi != 0 for c in comps):
            continue
        core = core_of({edges[k]: m for k, m in enumerate(mult) if m})
        lengths = []
        for c in comps:
            lengths.append(sum(k for p, k in core.items() if p[0] in c.vertices))
        yield mult, lengths


def _cycle_factor(length, t):
    if length == 2:
        return ring_pow(t, 2)
    return ring_mul(2, ring_add(ring_pow(ring_add(1, t), length), -1))


def genfun_check(G, t=T, doubled=True):
    """``lhs = sum_m Q_m (-t)^m``, ``rhs = sum_H (-1)^{k(H)} w(H) prod c(l_i)``
    with ``c(l) = 2((1+t)^l - 1)`` for ``l >= 3`` and ``c(2) = t^2``.
    ``doubled=False`` drops antiparallel J and doubled-edge H together."""
    lhs = 0
    for m in range(1, G.n + 1):
        lhs = ring_add(lhs, ring_mul(q_m(G, m, doubled=doubled), ring_pow(ring_mul(-1, t), m)))
    rhs = 0
    for mult, lengths in unicyclic_spanning(G):
        if not doubled and 2 in lengths:
            continue
        term = ring_mul(_sgn(len(lengths)), monomial_of(G, mult))
        for length in lengths:
            term = ring_mul(term, _cycle_factor(length, t))
        rhs = ring_add(rhs, term)
    return lhs, rhs


def genfun_printed(G, t=T):
    """The uncorrected form: ``sum Q_m t^m`` with bare ``Q_m`` against
    ``(-1)^n sum_H w(H) prod((1+t)^{l_i} - 1)`` over simple ``H``."""
    lhs = 0
    for m in range(1, G.n + 1):
        lhs = ring_add(lhs, ring_mul(q_m(G, m, signed=False), ring_pow(t, m)))
    rhs = 0
    for mult, lengths in unicyclic_spanning(G):
        if 2 in lengths:
            continue
        term = ring_mul(_sgn(G.n), monomial_of(G, mult))
        for length in lengths:
            term = ring_mul(term, ring_add(ring_pow(ring_add(1, t), length), -1))
        rhs = ring_add(rhs, term)
    return lhs, rhs


def altsum_check(G):
    """``t = -1``: ``sum_m Q_m = sum_H (-1)^{k_2(H)} 2^{k_{>=3}(H)} w(H)``
    where ``k_2`` counts doubled-edge components."""
    lhs = 0
    for m in range(1, G.n + 1):
        lhs = ring_add(lhs, q_m(G, m))
    rhs = 0
    for mult, lengths in unicyclic_spanning(G):
        k2 = lengths.count(2)
        rhs = ring_add(rhs, ring_mul(_sgn(k2) * 2 ** (len(lengths) - k2), monomial_of(G, mult)))
    return lhs, rhs
