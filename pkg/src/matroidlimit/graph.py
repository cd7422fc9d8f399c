"""Finite bounded-degree directed graphs and their cycle-matroid rank.

Edges are stored with an orientation (tail, head) but every rank
computation treats them as undirected. Edge identifiers are positions in
the edge list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised on malformed graph input or out-of-range identifiers."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    degree_bound: int

    def __post_init__(self):
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 1:
            raise GraphError("vertex_count must be positive")
        if self.degree_bound < 1:
            raise GraphError("degree_bound must be positive")
        seen = set()
        deg = [0] * self.vertex_count
        for t, h in edges:
            if not (0 <= t < self.vertex_count and 0 <= h < self.vertex_count):
                raise GraphError(f"edge ({t}, {h}) has an endpoint out of range")
            if t == h:
                raise GraphError(f"loop at vertex {t}")
            key = (t, h) if t < h else (h, t)
            if key in seen:
                raise GraphError(f"parallel edge between {key[0]} and {key[1]}")
            seen.add(key)
            deg[t] += 1
            deg[h] += 1
        worst = max(deg)
        if worst > self.degree_bound:
            raise GraphError(
                f"vertex degree {worst} exceeds degree bound {self.degree_bound}"
            )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for t, h in self.edges:
            deg[t] += 1
            deg[h] += 1
        return deg

    def neighbors(self) -> list[list[int]]:
        """Undirected adjacency lists; neighbors appear in edge-id order."""
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for t, h in self.edges:
            adj[t].append(h)
            adj[h].append(t)
        return adj

    def incident_edges(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (t, h) in enumerate(self.edges):
            inc[t].append(i)
            inc[h].append(i)
        return inc

    def has_edge(self, tail: int, head: int) -> bool:
        return (tail, head) in self.edges

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under the vertex bijection ``v -> perm[v]``.

        Edge ids are preserved, so edge ``i`` of the result is the image of
        edge ``i`` of ``self``.
        """
        if sorted(perm) != list(range(self.vertex_count)):
            raise GraphError("relabeling is not a permutation of the vertices")
        return Graph(
            self.vertex_count,
            tuple((perm[t], perm[h]) for t, h in self.edges),
            self.degree_bound,
        )

    def reversed(self, edge_ids: Iterable[int] | None = None) -> "Graph":
        flip = set(range(self.edge_count) if edge_ids is None else edge_ids)
        return Graph(
            self.vertex_count,
            tuple((h, t) if i in flip else (t, h) for i, (t, h) in enumerate(self.edges)),
            self.degree_bound,
        )

    def is_connected(self) -> bool:
        return len(components(self, range(self.edge_count))) == 1


class UnionFind:
    """Disjoint sets over ``0..n-1``; the representative is the smallest member."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.count -= 1
        return True


def _check_subset(g: Graph, f: Iterable[int]) -> list[int]:
    ids = list(f)
    m = g.edge_count
    for e in ids:
        if not 0 <= e < m:
            raise GraphError(f"edge id {e} out of range for a graph with {m} edges")
    return ids


def _union_find(g: Graph, f: Iterable[int]) -> UnionFind:
    uf = UnionFind(g.vertex_count)
    for e in _check_subset(g, f):
        t, h = g.edges[e]
        uf.union(t, h)
    return uf


def components(g: Graph, f: Iterable[int]) -> list[list[int]]:
    """Connected components of ``(V, f)`` ignoring orientation.

    Blocks are sorted lists, ordered by their smallest vertex.
    """
    uf = _union_find(g, f)
    blocks: dict[int, list[int]] = {}
    for v in range(g.vertex_count):
        blocks.setdefault(uf.find(v), []).append(v)
    return [blocks[r] for r in sorted(blocks)]


def component_count(g: Graph, f: Iterable[int]) -> int:
    return _union_find(g, f).count


def matroid_rank(g: Graph, f: Iterable[int]) -> int:
    """Rank of ``f`` in the cycle matroid: ``|V| - c(f)``."""
    return g.vertex_count - component_count(g, f)


def normalized_rank(g: Graph, f: Iterable[int]) -> Fraction:
    return Fraction(matroid_rank(g, f), g.vertex_count)


def normalized_rank_vertex_average(g: Graph, f: Iterable[int]) -> Fraction:
    """The same rank written as the vertex average of ``1 - 1/|comp(v)|``."""
    total = Fraction(0)
    for block in components(g, f):
        total += len(block) * (1 - Fraction(1, len(block)))
    return total / g.vertex_count


def involution_symmetry_check(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """Double-count edges between ``a`` and ``b`` from both sides.

    Under the uniform vertex measure involution invariance reduces to
    ``sum_{x in a} deg_b(x) == sum_{x in b} deg_a(x)``.
    """
    a, b = set(a), set(b)
    for v in a | b:
        if not 0 <= v < g.vertex_count:
            raise GraphError(f"vertex {v} out of range")
    adj = g.neighbors()
    lhs = sum(sum(1 for y in adj[x] if y in b) for x in a)
    rhs = sum(sum(1 for y in adj[x] if y in a) for x in b)
    return lhs == rhs


def greedy_proper_edge_coloring(g: Graph) -> tuple[int, ...]:
    """Edges in id order get the smallest color unused at either endpoint.

    Each edge sees at most ``2(D-1)`` previously colored incident edges, so
    at most ``2D - 1`` colors appear.
    """
    used: list[set[int]] = [set() for _ in range(g.vertex_count)]
    colors = []
    for t, h in g.edges:
        c = 1
        while c in used[t] or c in used[h]:
            c += 1
        used[t].add(c)
        used[h].add(c)
        colors.append(c)
    return tuple(colors)


def is_proper_edge_coloring(g: Graph, colors: Sequence[int]) -> bool:
    inc = g.incident_edges()
    for edges in inc:
        seen = [colors[e] for e in edges]
        if len(seen) != len(set(seen)):
            return False
    return True


# -- serialization ---------------------------------------------------------

def to_edgelist(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.degree_bound}"]
    lines += [f"{t} {h}" for t, h in g.edges]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphError("empty edge list")
    try:
        if len(rows[0]) != 2:
            raise GraphError("header must be 'vertex_count degree_bound'")
        n, d = int(rows[0][0]), int(rows[0][1])
        edges = []
        for r in rows[1:]:
            if len(r) != 2:
                raise GraphError(f"malformed edge line: {' '.join(r)!r}")
            edges.append((int(r[0]), int(r[1])))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(str(exc)) from exc
    return Graph(n, tuple(edges), d)


def to_json(g: Graph) -> str:
    doc = {
        "vertex_count": g.vertex_count,
        "degree_bound": g.degree_bound,
        "edges": [list(e) for e in g.edges],
    }
    return json.dumps(doc, sort_keys=True) + "\n"


def from_json(text: str) -> Graph:
    doc = json.loads(text)
    try:
        return Graph(int(doc["vertex_count"]), tuple(map(tuple, doc["edges"])), int(doc["degree_bound"]))
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc


def load_graph(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return from_json(text)
    return from_edgelist(text)


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(to_json(g) if path.endswith(".json") else to_edgelist(g))
