"""Subsets of the positive roots of A_{n-1} and D_n read as signed graphs.

``e+_ij = b_i - b_j`` carries weight ``u_i_j`` and ``e-_ij = b_i + b_j``
carries ``v_i_j``.  ``Gamma(S)`` is the multigraph on ``1..n`` with one
edge per root; a pair holding both roots is a 2-cycle with one ``-`` edge.
A cycle is odd when it has an odd number of ``-`` edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BadShape, IdentityViolation, NotIrreducible, TooLarge
from .graph import _components_raw, core_of
from .linalg import PairSet, det, minor, rank, tau_sign
from .ring import Poly, edge_var, ring_add, ring_mul, ring_pow, ring_sub

__all__ = [
    "RootSet",
    "root_vectors",
    "is_independent",
    "independent_by_rank",
    "independent_by_graph",
    "maximal_independent_subsets",
    "maximal_by_structure",
    "is_irreducible",
    "ntrees_check",
    "dn_laplacian",
    "cardm_check",
    "cardm_printed",
    "sumd_check",
    "sumd_printed",
    "ROOT_CAP",
]

ROOT_CAP = 16
T = Poly.var("t")


def _sgn(k):
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class RootSet:
    """``roots`` is a sorted tuple of ``(i, j, sign)`` with ``i < j`` and
    ``sign`` in ``'+'``/``'-'``."""

    n: int
    roots: tuple

    def __init__(self, n, roots):
        out = []
        for i, j, s in roots:
            i, j = int(i), int(j)
            if s not in "+-" or len(s) != 1:
                raise BadShape(f"sign must be '+' or '-', got {s!r}")
            if i == j:
                raise BadShape(f"root ({i}, {j}) is a loop")
            if i > j:
                i, j = j, i
            if not (1 <= i and j <= n):
                raise BadShape(f"root ({i}, {j}) outside 1..{n}")
            out.append((i, j, s))
        if len(set(out)) != len(out):
            raise BadShape("duplicate root")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "roots", tuple(sorted(out)))

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    @property
    def is_type_a(self):
        return all(s == "+" for _, _, s in self.roots)

    @property
    def minus_roots(self):
        return [r for r in self.roots if r[2] == "-"]

    def subset(self, roots):
        return RootSet(self.n, roots)

    def without(self, drop):
        drop = set(drop)
        return RootSet(self.n, [r for r in self.roots if r not in drop])

    def weight(self, root):
        i, j, s = root
        return edge_var(i, j, "u" if s == "+" else "v")

    def w(self, roots=None):
        out = 1
        for r in self.roots if roots is None else roots:
            out = ring_mul(out, self.weight(r))
        return out

    def __str__(self):
        return "{" + ", ".join(f"e{s}{i}{j}" for i, j, s in self.roots) + "}"


def root_vectors(S):
    out = []
    for i, j, s in S.roots:
        v = [0] * S.n
        v[i - 1] = 1
        v[j - 1] = -1 if s == "+" else 1
        out.append(tuple(v))
    return out


def _components(n, roots):
    """Spanning components of Gamma(roots) with the roots they hold."""
    items = [(i, j, 1) for i, j, _ in roots]
    comps = _components_raw(n, items, True)
    out = []
    for c in comps:
        rs = [r for r in roots if r[0] in c.vertices]
        out.append((c, rs))
    return out


def _cycle_minus(rs):
    """Number of ``-`` roots on the unique cycle of a unicyclic component."""
    mult = {}
    for i, j, _ in rs:
        mult[(i, j)] = mult.get((i, j), 0) + 1
    core = core_of(mult)
    return sum(1 for i, j, s in rs if s == "-" and (i, j) in core)


def independent_by_rank(roots, n):
    return rank(root_vectors(RootSet(n, roots))) == len(roots)


def independent_by_graph(roots, n):
    """Every component is a tree or has one cycle, and that cycle is odd."""
    for c, rs in _components(n, roots):
        e = len(rs)
        v = len(c.vertices)
        if e > v:
            return False
        if e == v and _cycle_minus(rs) % 2 == 0:
            return False
    return True


def is_independent(S):
    a = independent_by_rank(S.roots, S.n)
    b = independent_by_graph(S.roots, S.n)
    if a != b:
        raise IdentityViolation(f"rank says {a}, graph criterion says {b} for {S}")
    return a


def maximal_independent_subsets(S, cap=ROOT_CAP):
    """Independent subsets admitting no independent one-root extension in S."""
    if len(S) > cap:
        raise TooLarge(f"{len(S)} roots exceeds cap {cap}")
    roots = S.roots
    for size in range(len(roots), -1, -1):
        for sub in combinations(roots, size):
            if not independent_by_rank(sub, S.n):
                continue
            rest = [r for r in roots if r not in sub]
            if all(not independent_by_rank(sub + (r,), S.n) for r in rest):
                yield S.subset(sub)


def maximal_by_structure(S, cap=ROOT_CAP):
    """Maximal sets predicted from the graph: on each component of Gamma(S)
    with an odd cycle, a spanning subgraph whose components are all
    odd-unicyclic; on the others, a spanning tree."""
    if len(S) > cap:
        raise TooLarge(f"{len(S)} roots exceeds cap {cap}")
    per_comp = []
    for c, rs in _components(S.n, S.roots):
        v = len(c.vertices)
        if v == 1:
            per_comp.append([()])
            continue
        odd = []
        trees = []
        for size in (v - 1, v):
            for sub in combinations(rs, size):
                comps = [x for x in _components(S.n, list(sub)) if x[0].vertices & c.vertices]
                if size == v - 1 and len(comps) == 1 and len(comps[0][0].vertices) == v:
                    trees.append(sub)
                if size == v and all(len(x[1]) == len(x[0].vertices) and _cycle_minus(x[1]) % 2 for x in comps):
                    odd.append(sub)
        per_comp.append(odd or trees)
    out = [()]
    for choices in per_comp:
        out = [a + b for a in out for b in choices]
    return sorted(tuple(sorted(x)) for x in out)


def is_irreducible(S):
    return len(_components(S.n, list(S.roots))) == 1


def _laplacian_from(n, items):
    L = [[0] * n for _ in range(n)]
    for i, j, w in items:
        a, b = i - 1, j - 1
        L[a][b] = ring_sub(L[a][b], w)
        L[b][a] = ring_sub(L[b][a], w)
        L[a][a] = ring_add(L[a][a], w)
        L[b][b] = ring_add(L[b][b], w)
    return L


def dn_laplacian(S):
    """Laplacian of Gamma(S) with pair weight ``u_ij [e+ in S] + v_ij [e- in S]``."""
    return _laplacian_from(S.n, [(i, j, S.weight((i, j, s))) for i, j, s in S.roots])


def ntrees_check(S):
    """Principal minor of the Laplacian against the sum over maximal
    independent subsets, for an irreducible A-type set."""
    if not S.is_type_a:
        raise BadShape("ntrees_check takes A-type root sets (no '-' roots)")
    if not is_irreducible(S):
        raise NotIrreducible(f"Gamma{S} is not connected")
    lhs = det(minor(dn_laplacian(S), PairSet([(1, 1)])))
    rhs = 0
    for sub in maximal_independent_subsets(S):
        rhs = ring_add(rhs, S.w(sub.roots))
    return lhs, rhs


# ---------------------------------------------------------------------------
# generating function over minus roots


def _minus_pairsets(S, m):
    """Component-disjoint J of ``m`` ordered pairs, each pair naming a
    distinct ``-`` root of S; yields ``(J, roots used)``."""
    minus = S.minus_roots
    for combo in combinations(minus, m):
        for mask in range(1 << m):
            pairs = [(i, j) if not (mask >> k) & 1 else (j, i) for k, (i, j, _) in enumerate(combo)]
            if len({a for a, _ in pairs}) == m and len({b for _, b in pairs}) == m:
                yield PairSet(pairs), combo


def q_dm(S, m, signed=True):
    """``sum_J (-1)^{sum J} eps(tau_J) v(J) det L_{S - J-}(J)``; bare terms
    when ``signed=False``."""
    if m == 0:
        return 1
    total = 0
    for J, used in _minus_pairsets(S, m):
        d = det(minor(dn_laplacian(S.without(used)), J))
        term = ring_mul(S.w(used), d)
        if signed:
            term = ring_mul(_sgn(J.total) * tau_sign(J), term)
        total = ring_add(total, term)
    return total


def _unicyclic_subsets(S):
    """Spanning ``H`` of S (``n`` roots) with every component unicyclic;
    yields ``(roots, list of minus counts per cycle)``."""
    for sub in combinations(S.roots, S.n):
        comps = _components(S.n, list(sub))
        if any(len(rs) != len(c.vertices) for c, rs in comps):
            continue
        yield sub, [_cycle_minus(rs) for _, rs in comps]


def cardm_check(S, t=T):
    """``lhs = sum_m Q_m (-t)^m``; ``rhs = sum_H (-1)^{k(H)} w(H) prod 2((1+t)^{l_i^-} - 1)``."""
    lhs = 0
    for m in range(1, S.n + 1):
        lhs = ring_add(lhs, ring_mul(q_dm(S, m), ring_pow(ring_mul(-1, t), m)))
    rhs = 0
    for sub, minus in _unicyclic_subsets(S):
        term = ring_mul(_sgn(len(minus)), S.w(sub))
        for lm in minus:
            term = ring_mul(term, ring_mul(2, ring_sub(ring_pow(ring_add(1, t), lm), 1)))
        rhs = ring_add(rhs, term)
    return lhs, rhs


def cardm_printed(S, t=T):
    """Uncorrected form: ``sum t^m Q_m`` with bare ``Q_m`` against
    ``(-1)^n sum_H w(H) prod((1+t)^{l_i^-} - 1)``."""
    lhs = 0
    for m in range(1, S.n + 1):
        lhs = ring_add(lhs, ring_mul(q_dm(S, m, signed=False), ring_pow(t, m)))
    rhs = 0
    for sub, minus in _unicyclic_subsets(S):
        term = ring_mul(_sgn(S.n), S.w(sub))
        for lm in minus:
            term = ring_mul(term, ring_sub(ring_pow(ring_add(1, t), lm), 1))
        rhs = ring_add(rhs, term)
    return lhs, rhs


def sumd_check(S):
    """``t = -2``: ``sum_m 2^m Q_m`` against ``sum_F 4^{k(F)} w(F)`` over
    spanning F whose components are all odd-unicyclic.

    Returns ``(lhs, rhs, degenerate)``; ``degenerate`` is True when Gamma(S)
    has no such F (the maximal independent sets are then forests).
    """
    lhs = 0
    for m in range(1, S.n + 1):
        lhs = ring_add(lhs, ring_mul(2 ** m, q_dm(S, m)))
    rhs = 0
    found = False
    for sub, minus in _unicyclic_subsets(S):
        if all(lm % 2 for lm in minus):
            found = True
            rhs = ring_add(rhs, ring_mul(4 ** len(minus), S.w(sub)))
    return lhs, rhs, not found


def sumd_printed(S):
    """Uncorrected form at ``t = -2``: ``sum (-2)^m Q_m`` (bare) against
    ``(-1)^n sum_F (-2)^{k(F)} w(F)`` over the same F."""
    lhs = 0
    for m in range(1, S.n + 1):
        lhs = ring_add(lhs, ring_mul((-2) ** m, q_dm(S, m, signed=False)))
    rhs = 0
    for sub, minus in _unicyclic_subsets(S):
        if all(lm % 2 for lm in minus):
            rhs = ring_add(rhs, ring_mul(_sgn(S.n) * (-2) ** len(minus), S.w(sub)))
    return lhs, rhs
