"""
Rank functions and quotient sets of small graphs
================================================

"""

from fractions import Fraction

import numpy as np

from matroidlimit.generators import cycle, path
from matroidlimit.graph import Graph, components, normalized_rank
from matroidlimit.quotient import EdgeColoring, dk_distance, hausdorff, quotient_point, quotient_set_exact

# The normalized rank of an edge set F is (|V| - #components)/|V|.
p4 = path(4)
print(p4.edges)
print(normalized_rank(p4, [0, 2]), components(p4, [0, 2]))

# A k-coloring of the edges pushes the rank forward onto subsets of colors.
# Coordinates are indexed by bitmask: bit c-1 set means color c is included.
c4 = cycle(4)
alpha = EdgeColoring(2, (1, 1, 2, 2))
p = quotient_point(c4, alpha)
print([str(x) for x in p.coords])

# Q_k collects every such point. For a connected graph Q_1 is a single point.
print(quotient_set_exact(c4, 1).points)

# Q_2 of the 4-cycle, as a float array
q2 = quotient_set_exact(c4, 2)
print(q2.as_array())
print("colorings that landed on an existing point:", q2.collisions)

# d_k compares two colored graphs through their quotient points
k2 = Graph(2, ((0, 1),), 1)
print(dk_distance(k2, EdgeColoring(1, (1,)), cycle(3), EdgeColoring(1, (1, 1, 1))), float(Fraction(1, 6)))

# and the Hausdorff distance compares whole quotient sets
for n in (4, 6, 8):
    print(n, hausdorff(quotient_set_exact(cycle(3), 2), quotient_set_exact(cycle(n), 2)))

# The 2^k coordinates always form a normalized monotone submodular function
pts = quotient_set_exact(path(5), 2).as_array()
print(np.all(pts[:, 0] == 0), np.all(pts[:, 3] >= pts[:, 1]))
