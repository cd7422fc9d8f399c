"""
Decorations, rooted balls and the local distance
================================================

"""

from matroidlimit.generators import cycle, directed_cycle
from matroidlimit.graph import Graph
from matroidlimit.nets import Decoration, NetRegistry, build_net, check_decoration_injective, decorate, net_size
from matroidlimit.omega import ball, ball_distribution, local_distance, rooted_iso

# A 2^-n net has the same length M(k, n) for every graph
print(net_size(1, 1), net_size(2, 1), net_size(2, 2))
net = build_net(cycle(3), 2, 1)
print(len(net), net.distinct())

# Nets are built on a canonical representative and transported to the graph
g = directed_cycle(3)
reg = NetRegistry(seed=0)
window = [(2, 1), (2, 2)]
reg.build_window(g, window)
dec = decorate(g, reg, window)
print(check_decoration_injective(g, dec))

# without a decoration all edges of C_3 look alike
print(check_decoration_injective(g, Decoration.constant(3)))

# decorated balls tell the three roots apart once the level shows the colors
print([rooted_iso(ball(g, dec, 0, 1, 2), ball(g, dec, v, 1, 2)) for v in range(3)])
print([rooted_iso(ball(g, dec, 0, 1, 0), ball(g, dec, v, 1, 0)) for v in range(3)])

# ball statistics: an in-star path has two kinds of vertices
p3 = Graph(3, ((0, 1), (2, 1)), 2)
law = ball_distribution(p3, Decoration.constant(2), 1, 0)
print(sorted(law.histogram.values()))

# local distance between the roots of two long cycles
a, b = cycle(100), cycle(200)
ld = local_distance((a, 0, Decoration.constant(100)), (b, 0, Decoration.constant(200)), 60, 10)
print(ld.best_radius, ld.best_level, ld.upper, ld.lower)
