"""Small named graphs used by the test suite and ``verify``."""

from __future__ import annotations

from .generators import cycle, directed_cycle, path, random_regular
from .graph import Graph


def corpus() -> dict[str, Graph]:
    g = {
        "K2": Graph(2, ((0, 1),), 1),
        "P3": path(3),
        "P3_in": Graph(3, ((0, 1), (2, 1)), 2),
        "P4": path(4),
        "P5": path(5),
        "C3": cycle(3),
        "C3_dir": directed_cycle(3),
        "C4": cycle(4),
        "C4_dir": directed_cycle(4),
        "C5": cycle(5),
        "C6": cycle(6),
        "star3": Graph(4, ((0, 1), (0, 2), (0, 3)), 3),
        "paw": Graph(4, ((0, 1), (1, 2), (0, 2), (2, 3)), 3),
        "diamond": Graph(4, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)), 3),
        "K4": Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)), 3),
        "bull": Graph(5, ((0, 1), (1, 2), (0, 2), (1, 3), (2, 4)), 3),
        "K23": Graph(5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)), 3),
        "house": Graph(5, ((0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)), 3),
        "two_triangles": Graph(5, ((0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)), 4),
        "rr6_3": random_regular(6, 3, 11),
        "spider": Graph(7, ((0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)), 3),
        "two_K2": Graph(4, ((0, 1), (2, 3)), 1),
    }
    return g


def connected_corpus() -> dict[str, Graph]:
    return {name: g for name, g in corpus().items() if g.is_connected()}
