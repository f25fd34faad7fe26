"""
External activity and connected subgraphs
=========================================

The multivariate Tutte polynomial and the polynomial C_G computed three
ways: spanning trees with active edges, connected spanning subgraphs and
set partitions.
"""

from graphsums import cycle_graph, triangle
from graphsums.tutte import (
    EdgeOrder,
    ext_activity_partition_formula,
    ext_activity_subgraph_sum,
    ext_activity_tree_def,
    free_term_check,
    moebius_lemma_check,
    tutte_multivariate,
)

G = triangle()
print("Tutte polynomial:", tutte_multivariate(G))

# three computations of C_G
print("trees:     ", ext_activity_tree_def(G))
print("subgraphs: ", ext_activity_subgraph_sum(G))
print("partitions:", ext_activity_partition_formula(G))

# the tree definition does not depend on the edge order
C4 = cycle_graph(4, "ones")
print("C4 over all orders:", {ext_activity_tree_def(C4, o) for o in EdgeOrder.all_orders(C4)})

# C_G is the coefficient of q^1 in the Tutte polynomial
lhs, rhs = free_term_check(G)
print("q^1 coefficient matches:", lhs == rhs)

# signed partition sums used in the partition formula vanish for n >= 2
print([moebius_lemma_check(n) for n in range(1, 9)])
