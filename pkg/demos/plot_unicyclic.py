"""
Unicyclic subgraphs and a generating function
=============================================

Spanning subgraphs whose components each hold exactly one cycle, counted
by cycle length with a weighted determinant, and the generating function
over signed minors.
"""

from graphsums import complete_graph, triangle
from graphsums.chi_zero import (
    altsum_check,
    chi_zero_connected_sum,
    chi_zero_oracle,
    genfun_check,
    given_cycle_check,
    one_cycle_oracle,
    one_cycle_sum,
)
from graphsums.linalg import PairSet

G = complete_graph(4, "ones")

# connected spanning unicyclic subgraphs of K4 by cycle length
for s in (3, 4):
    print(f"cycle length {s}: {one_cycle_sum(G, s)} (enumeration {one_cycle_oracle(G, s)})")
print("all lengths:", chi_zero_connected_sum(G), chi_zero_oracle(G))

# fixing the directed edge 1->2 on the cycle
lhs, rhs = given_cycle_check(G, PairSet([(1, 2)]))
print("edge 1->2 on the cycle:", lhs, rhs)

# generating function in t, coefficient by coefficient
lhs, rhs = genfun_check(triangle())
print("triangle, minor side:", lhs)
print("triangle, cycle side:", rhs)

# at t = -1 the right side collapses to one term per unicyclic subgraph
print("alternating sum holds:", altsum_check(G)[0] == altsum_check(G)[1])
