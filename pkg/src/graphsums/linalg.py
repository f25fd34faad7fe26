"""Exact matrices over ring elements.

A matrix is a plain list of rows.  Integer and rational matrices use
fraction-free (Bareiss) elimination; polynomial matrices use a
division-free Laplace expansion memoised over the set of used columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import BadPairSet, TooLarge
from .ring import Poly, normalize, ring_add, ring_mul, ring_neg, ring_sub

__all__ = [
    "laplacian",
    "identity",
    "det",
    "det_bareiss",
    "det_expand",
    "minor",
    "principal_minor",
    "rank",
    "PairSet",
    "tau_sign",
    "perm_sign",
    "compose",
    "CycleType",
    "cycle_type",
    "cycle_type_buckets",
    "f_det",
    "sign_f",
    "DET_CAP_SYMBOLIC",
    "DET_CAP_INTEGER",
    "FDET_CAP",
]

DET_CAP_SYMBOLIC = 12
DET_CAP_INTEGER = 64
FDET_CAP = 9


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def laplacian(G):
    """Weighted Laplacian: ``-w_ij`` off the diagonal, row sums on it."""
    n = G.n
    L = [[0] * n for _ in range(n)]
    for (i, j), w in zip(G.edges, G.weights):
        a, b = i - 1, j - 1
        L[a][b] = ring_sub(L[a][b], w)
        L[b][a] = ring_sub(L[b][a], w)
        L[a][a] = ring_add(L[a][a], w)
        L[b][b] = ring_add(L[b][b], w)
    for i, j, delta in G.laplacian_shift:
        L[i - 1][j - 1] = ring_add(L[i - 1][j - 1], delta)
    return L


def _is_scalar_matrix(M):
    return all(not isinstance(x, Poly) for row in M for x in row)


def det_bareiss(M):
    """Fraction-free elimination; entries must be ints or Fractions."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                if isinstance(num, int) and isinstance(prev, int):
                    A[i][j] = num // prev
                else:
                    A[i][j] = Fraction(num) / prev
        prev = A[k][k]
    return normalize(sign * A[n - 1][n - 1])


def det_expand(M):
    """Division-free determinant: Laplace expansion row by row, memoised on
    the set of columns already used (``O(n 2^n)`` ring multiplications)."""
    n = len(M)
    if n == 0:
        return 1
    layer = {0: 1}
    for r in range(n):
        row = M[r]
        nxt = {}
        for mask, acc in layer.items():
            for c in range(n):
                if mask >> c & 1:
                    continue
                a = row[c]
                if a == 0:
                    continue
                # inversions created: used columns to the right of c
                flips = bin(mask >> (c + 1)).count("1")
                term = ring_mul(acc, a)
                if flips & 1:
                    term = ring_neg(term)
                key = mask | (1 << c)
                prev = nxt.get(key)
                nxt[key] = term if prev is None else ring_add(prev, term)
        layer = nxt
        if not layer:
            return 0
    return normalize(layer.get((1 << n) - 1, 0))


def det(M, cap=None):
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    scalar = _is_scalar_matrix(M)
    if cap is None:
        cap = DET_CAP_INTEGER if scalar else DET_CAP_SYMBOLIC
    if n > cap:
        raise TooLarge(f"{n}x{n} determinant exceeds cap {cap}")
    if scalar:
        return det_bareiss(M)
    return det_expand(M)


def rank(rows):
    """Rank over the rationals of a list of integer/rational row vectors."""
    A = [[Fraction(x) for x in row] for row in rows]
    if not A:
        return 0
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return r


# ---------------------------------------------------------------------------
# component-disjoint pair sets


@dataclass(frozen=True)
class PairSet:
    """Component-disjoint set of index pairs, stored sorted by first index."""

    pairs: tuple

    def __init__(self, pairs):
        pairs = tuple(sorted((int(i), int(j)) for i, j in pairs))
        firsts = [i for i, _ in pairs]
        seconds = [j for _, j in pairs]
        if len(set(firsts)) != len(firsts) or len(set(seconds)) != len(seconds):
            raise BadPairSet(f"{list(pairs)} is not component-disjoint")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def parse(cls, text):
        """``"1:2,3:1"`` -> {(1, 2), (3, 1)}."""
        text = text.strip()
        if not text:
            return cls(())
        out = []
        for chunk in text.split(","):
            try:
                i, j = chunk.split(":")
                out.append((int(i), int(j)))
            except ValueError:
                raise BadPairSet(f"cannot read pair {chunk!r}") from None
        return cls(out)

    @property
    def m(self):
        return len(self.pairs)

    @property
    def firsts(self):
        return [i for i, _ in self.pairs]

    @property
    def seconds(self):
        return [j for _, j in self.pairs]

    @property
    def total(self):
        """Sum of all indices, i.e. the exponent of the cofactor sign."""
        return sum(i + j for i, j in self.pairs)

    def tau(self):
        """tau with j_{tau(1)} < ... < j_{tau(m)}, as a 0-based list."""
        js = self.seconds
        return sorted(range(len(js)), key=js.__getitem__)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __str__(self):
        return ",".join(f"{i}:{j}" for i, j in self.pairs)


def perm_sign(p):
    """Sign of a permutation given as a list of images of 0..m-1."""
    seen = [False] * len(p)
    sign = 1
    for s in range(len(p)):
        if seen[s]:
            continue
        length = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def compose(p, q):
    """(p o q)(x) = p(q(x))."""
    return [p[q[x]] for x in range(len(q))]


def tau_sign(J):
    if not isinstance(J, PairSet):
        J = PairSet(J)
    return perm_sign(J.tau())


def minor(M, J):
    """Delete rows ``i_p`` and columns ``j_p`` (1-based) of ``M``."""
    if not isinstance(J, PairSet):
        J = PairSet(J)
    rows = set(J.firsts)
    cols = set(J.seconds)
    n = len(M)
    if any(not 1 <= x <= n for x in rows | cols):
        raise BadPairSet(f"{J} has an index outside 1..{n}")
    return [[M[r][c] for c in range(n) if c + 1 not in cols] for r in range(n) if r + 1 not in rows]


def principal_minor(M, r):
    return det(minor(M, PairSet([(r, r)])))


# ---------------------------------------------------------------------------
# f-determinants


@dataclass(frozen=True)
class CycleType:
    """Cycle type 1^{k_1} 2^{k_2} ... n^{k_n}; ``counts[s]`` is ``k_s``."""

    n: int
    counts: tuple  # length n + 1, counts[0] unused

    def __getitem__(self, s):
        return self.counts[s] if 0 < s < len(self.counts) else 0

    @property
    def cycles(self):
        return sum(self.counts)

    @property
    def sign(self):
        return -1 if (self.n - self.cycles) % 2 else 1

    def as_dict(self):
        return {s: k for s, k in enumerate(self.counts) if k}

    def __str__(self):
        return " ".join(f"{s}^{k}" for s, k in self.as_dict().items()) or "()"


def cycle_type(p):
    n = len(p)
    counts = [0] * (n + 1)
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        length = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        counts[length] += 1
    return CycleType(n, tuple(counts))


def _product(factors):
    return reduce(ring_mul, factors, 1)


def cycle_type_buckets(M, cap=FDET_CAP):
    """Sum of ``a_{1,s(1)} ... a_{n,s(n)}`` over permutations grouped by
    cycle type.  Permutations hitting a zero entry are pruned."""
    n = len(M)
    if n > cap:
        raise TooLarge(f"f-determinant of size {n} exceeds cap {cap}")
    nonzero = [[c for c in range(n) if M[r][c] != 0] for r in range(n)]
    buckets = {}
    perm = [0] * n
    used = [False] * n

    def rec(r, acc):
        if r == n:
            ct = cycle_type(perm)
            prev = buckets.get(ct)
            buckets[ct] = acc if prev is None else ring_add(prev, acc)
            return
        for c in nonzero[r]:
            if used[c]:
                continue
            used[c] = True
            perm[r] = c
            rec(r + 1, ring_mul(acc, M[r][c]))
            used[c] = False

    rec(0, 1)
    return buckets


def f_det(M, f, cap=FDET_CAP, buckets=None):
    """sum over permutations s of f(cycle type of s) * prod a_{i, s(i)}."""
    if buckets is None:
        buckets = cycle_type_buckets(M, cap)
    total = 0
    for ct, val in buckets.items():
        coeff = f(ct)
        if coeff:
            total = ring_add(total, ring_mul(coeff, val))
    return total


def sign_f(ct):
    """The ordinary sign of a permutation as a function of its cycle type."""
    return ct.sign

