"""
Spanning trees from a Laplacian minor
=====================================

Weighted spanning tree sums of a small graph, first as a determinant and
then by listing the trees. Every principal minor gives the same answer.
"""

from graphsums import complete_graph, laplacian, triangle
from graphsums.linalg import PairSet, det, minor
from graphsums.matrix_tree import all_minors_check, spanning_tree_sum, spanning_tree_sum_oracle

# edge weights are polynomial variables w_i_j
G = triangle()
print("Laplacian of the triangle:")
for row in laplacian(G):
    print("   ", [str(x) for x in row])

# delete row and column 1, take the determinant
print("tree sum:", spanning_tree_sum(G))
print("by enumeration:", spanning_tree_sum_oracle(G))

# K4 with all weights 1 has 4^2 = 16 spanning trees, whichever minor we use
K4 = complete_graph(4, "ones")
print("K4 trees:", [spanning_tree_sum(K4, r) for r in range(1, 5)])

# off-diagonal minors count forests where each deleted row is tied to a
# deleted column; both sides of the signed identity are printed
J = PairSet([(1, 2), (3, 4)])
lhs, rhs = all_minors_check(complete_graph(4), J)
print("minor with rows 1,3 and columns 2,4 removed:", det(minor(laplacian(complete_graph(4)), J)))
print("forest side matches:", lhs == rhs)
