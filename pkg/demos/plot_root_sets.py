"""
Root subsets as signed graphs
=============================

Positive roots b_i - b_j and b_i + b_j become + and - edges. Linear
independence is read off the graph, and a determinant identity sums over
maximal independent sets.
"""

from graphsums import RootSet
from graphsums.roots import (
    cardm_check,
    cardm_printed,
    is_independent,
    maximal_by_structure,
    maximal_independent_subsets,
    ntrees_check,
    sumd_check,
)

# a triangle with one minus edge is an odd cycle, hence independent
odd = RootSet(3, [(1, 2, "+"), (1, 3, "+"), (2, 3, "-")])
even = RootSet(3, [(1, 2, "+"), (1, 3, "-"), (2, 3, "-")])
print(odd, "independent:", is_independent(odd))
print(even, "independent:", is_independent(even))

# plus-only sets: maximal independent subsets are spanning trees
A = RootSet(4, [(1, 2, "+"), (2, 3, "+"), (3, 4, "+"), (1, 4, "+"), (1, 3, "+")])
print("maximal sets:", len(list(maximal_independent_subsets(A))), "==", len(maximal_by_structure(A)))
lhs, rhs = ntrees_check(A)
print("minor equals tree sum:", lhs == rhs)

# the generating function over minus roots, with its uncorrected form
S = RootSet(3, [(1, 2, "+"), (1, 2, "-"), (2, 3, "+"), (1, 3, "-")])
lhs, rhs = cardm_check(S)
print("cardm:", lhs == rhs, "| uncorrected:", cardm_printed(S)[0] == cardm_printed(S)[1])

# value at t = -2: a sum over spanning subsets with only odd cycles
lhs, rhs, degenerate = sumd_check(RootSet(2, [(1, 2, "+"), (1, 2, "-")]))
print("doubled pair at t = -2:", lhs, rhs)
