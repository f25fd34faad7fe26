"""
Orientations without sources or sinks
=====================================

Count orientations where every vertex has an incoming and an outgoing
edge, directly and through three closed formulas.
"""

from graphsums import bowtie, complete_graph, cycle_graph, path_graph
from graphsums.orientations import METHODS, chromatic_polynomial

for name, G in [("edge", path_graph(2)), ("C5", cycle_graph(5)), ("bowtie", bowtie()), ("K4", complete_graph(4))]:
    counts = {m: fn(G) for m, fn in METHODS.items()}
    print(f"{name:7s}", counts)

# the chromatic polynomial that one formula evaluates at -1 and 2
P = chromatic_polynomial(cycle_graph(4))
print("chromatic polynomial of C4:", P)
print("at lambda = 2:", chromatic_polynomial(cycle_graph(4), 2))
