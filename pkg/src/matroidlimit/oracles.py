"""Slow reference computations kept independent of the fast paths.

Nothing here touches union-find, numpy batching or the coloring index
encoding; tests and :mod:`matroidlimit.verify` compare the fast paths
against these.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .graph import Graph


def dfs_component_sizes(n: int, edges) -> list[int]:
    adj = {v: set() for v in range(n)}
    for t, h in edges:
        adj[t].add(h)
        adj[h].add(t)
    seen = set()
    sizes = []
    for s in range(n):
        if s in seen:
            continue
        stack, size = [s], 0
        seen.add(s)
        while stack:
            v = stack.pop()
            size += 1
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        sizes.append(size)
    return sizes


def brute_rank(g: Graph, subset) -> Fraction:
    """Vertex average of ``1 - 1/|component|`` found by depth-first search."""
    chosen = [g.edges[e] for e in subset]
    sizes = dfs_component_sizes(g.vertex_count, chosen)
    return sum((s * (1 - Fraction(1, s)) for s in sizes), Fraction(0)) / g.vertex_count


def brute_quotient_set(g: Graph, k: int) -> set[tuple[Fraction, ...]]:
    """Every k-quotient of ``g`` by running over all color tuples."""
    subsets = [frozenset(c for c in range(1, k + 1) if mask >> (c - 1) & 1) for mask in range(2**k)]
    out = set()
    for colors in itertools.product(range(1, k + 1), repeat=g.edge_count):
        out.add(tuple(
            brute_rank(g, [e for e, c in enumerate(colors) if c in A]) for A in subsets
        ))
    return out


def brute_hausdorff(a, b) -> float:
    def d(x, y):
        return sum((float(p) - float(q)) ** 2 for p, q in zip(x, y)) ** 0.5
    ab = max(min(d(x, y) for y in b) for x in a)
    ba = max(min(d(x, y) for x in a) for y in b)
    return max(ab, ba)


def series_tail(K: int, upto: int = 60) -> float:
    return sum(2.0 ** (-k / 2) for k in range(K + 1, upto + 1))
