"""Finite truncations of rooted decorated graphs and the local distance.

A point ``(G, v, chi)`` of the space of rooted decorated graphs is never
built in full.  Everything here works on radius-``r`` balls whose
decorations are cut down to the projection level ``m``, which keeps the
decoration blocks ``(k, n)`` with ``k, n <= m``.
"""

from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .canon import canonical_labeling, find_isomorphism
from .graph import Graph
from .nets import Decoration
from .quotient import DistanceInterval


class InvariantError(AssertionError):
    """An internal consistency check failed."""


@dataclass(frozen=True)
class RootedBall:
    graph: Graph
    root: int
    labels: tuple[bytes, ...]
    radius: int
    level: int
    origin: tuple[int, ...]

    def code(self) -> str:
        """Hex digest of the canonical form with the root marked."""
        colors = [1 if v == self.root else 0 for v in range(self.graph.vertex_count)]
        form = canonical_labeling(self.graph.vertex_count, self.graph.edges, colors, self.labels)
        return hashlib.blake2b(form.code, digest_size=20).hexdigest()


class _LabelCache:
    def __init__(self, decoration: Decoration):
        self.decoration = decoration
        self._by_level: dict[int, list[bytes]] = {}

    def at(self, m: int) -> list[bytes]:
        if m not in self._by_level:
            self._by_level[m] = self.decoration.labels(m)
        return self._by_level[m]


def _labels(decoration, m):
    if isinstance(decoration, _LabelCache):
        return decoration.at(m)
    return decoration.labels(m)


def ball(g: Graph, decoration: Decoration, v: int, r: int, m: int) -> RootedBall:
    """Induced ball ``B_{G,r}(v)`` with decorations projected to level ``m``.

    Vertices are renumbered in BFS order from ``v`` (neighbors explored in
    edge-id order), so the root is vertex 0.  Distances ignore orientation.
    """
    return _ball(g, _labels(decoration, m), v, r, m)


def _ball(g: Graph, labels, v: int, r: int, m: int) -> RootedBall:
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} out of range")
    if r < 0:
        raise ValueError("radius must be non-negative")
    inc = g.incident_edges()
    dist = {v: 0}
    order = [v]
    queue = deque([v])
    while queue:
        x = queue.popleft()
        if dist[x] == r:
            continue
        for e in inc[x]:
            t, h = g.edges[e]
            y = h if t == x else t
            if y not in dist:
                dist[y] = dist[x] + 1
                order.append(y)
                queue.append(y)
    pos = {x: i for i, x in enumerate(order)}
    kept = [e for e, (t, h) in enumerate(g.edges) if t in pos and h in pos]
    sub = Graph(len(order), tuple((pos[g.edges[e][0]], pos[g.edges[e][1]]) for e in kept), g.degree_bound)
    return RootedBall(sub, 0, tuple(labels[e] for e in kept), r, m, tuple(order))


def rooted_iso(b1: RootedBall, b2: RootedBall) -> bool:
    """Root-, direction- and decoration-preserving isomorphism of two balls."""
    if (b1.radius, b1.level) != (b2.radius, b2.level):
        raise ValueError(
            f"balls at (r={b1.radius}, m={b1.level}) and (r={b2.radius}, m={b2.level}) are not comparable"
        )
    n1, n2 = b1.graph.vertex_count, b2.graph.vertex_count
    if n1 != n2 or b1.graph.edge_count != b2.graph.edge_count:
        return False
    c1 = [1 if v == b1.root else 0 for v in range(n1)]
    c2 = [1 if v == b2.root else 0 for v in range(n2)]
    phi = find_isomorphism(n1, b1.graph.edges, n2, b2.graph.edges, c1, c2, b1.labels, b2.labels)
    return phi is not None


@dataclass(frozen=True)
class LocalDistance(DistanceInterval):
    indistinguishable: bool = False
    best_radius: int = 0
    best_level: int = 0


def local_distance(t1, t2, n_max: int, m_max: int) -> LocalDistance:
    """Truncated local distance between two rooted decorated graphs.

    ``t1`` and ``t2`` are ``(graph, root, decoration)`` triples.  The search
    covers ``0 <= n <= n_max`` and ``0 <= m <= m_max``; the returned upper
    end is the best ``2^-n + 2^-m`` found, the lower end subtracts what
    untested levels could still gain.
    """
    g1, v1, d1 = t1
    g2, v2, d2 = t2
    c1, c2 = _LabelCache(d1), _LabelCache(d2)
    best: Fraction | None = None
    best_at = (0, 0)
    all_iso = True
    top = m_max
    for n in range(n_max + 1):
        found = None
        for m in range(top, -1, -1):
            if rooted_iso(ball(g1, c1, v1, n, m), ball(g2, c2, v2, n, m)):
                found = m
                break
        if found is None:
            all_iso = False
            break
        if found < m_max:
            all_iso = False
        value = Fraction(1, 2**n) + Fraction(1, 2**found)
        if best is None or value < best:
            best, best_at = value, (n, found)
        # agreement at (n+1, m) forces agreement at (n, m)
        top = found
    assert best is not None  # radius-0 balls always agree
    slack = Fraction(1, 2**n_max) + Fraction(1, 2**m_max)
    lower = max(Fraction(0), best - slack)
    return LocalDistance(
        float(lower), float(best), mode="truncated",
        indistinguishable=all_iso, best_radius=best_at[0], best_level=best_at[1],
    )


def embed_and_check_adjacency(g: Graph, decoration: Decoration, x: int, y: int, r: int, m: int) -> bool:
    """Whether ``x -> y`` is an edge, with the truncated witness checked.

    For an edge ``x -> y`` the witness graph is the radius ``r+1`` ball
    around ``x``: it contains the arc, and its radius-``r`` balls around the
    images of ``x`` and ``y`` must match those taken in ``g``.
    """
    if not (0 <= x < g.vertex_count and 0 <= y < g.vertex_count):
        raise ValueError("vertex out of range")
    if not g.has_edge(x, y):
        return False
    cache = _LabelCache(decoration)
    witness = ball(g, cache, x, r + 1, m)
    pos = {orig: i for i, orig in enumerate(witness.origin)}
    wx, wy = pos[x], pos[y]
    if not witness.graph.has_edge(wx, wy):
        raise InvariantError("witness ball lost the arc x -> y")
    for root, orig in ((wx, x), (wy, y)):
        inner = _ball(witness.graph, witness.labels, root, r, m)
        if not rooted_iso(inner, ball(g, cache, orig, r, m)):
            raise InvariantError(f"radius-{r} ball of {orig} does not embed in the witness")
    return True


@dataclass(frozen=True)
class BallDistribution:
    radius: int
    level: int
    vertex_count: int
    histogram: dict[str, Fraction]

    def to_json(self) -> str:
        doc = {
            "r": self.radius,
            "m": self.level,
            "vertex_count": self.vertex_count,
            "histogram": {c: f"{p.numerator}/{p.denominator}" for c, p in sorted(self.histogram.items())},
        }
        return json.dumps(doc, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "BallDistribution":
        doc = json.loads(text)
        return cls(
            int(doc["r"]), int(doc["m"]), int(doc["vertex_count"]),
            {c: Fraction(p) for c, p in doc["histogram"].items()},
        )


def ball_distribution(g: Graph, decoration: Decoration, r: int, m: int) -> BallDistribution:
    """Law of the rooted ball around a uniform random vertex."""
    cache = _LabelCache(decoration)
    counts: dict[str, int] = {}
    for v in range(g.vertex_count):
        code = ball(g, cache, v, r, m).code()
        counts[code] = counts.get(code, 0) + 1
    hist = {c: Fraction(k, g.vertex_count) for c, k in counts.items()}
    return BallDistribution(r, m, g.vertex_count, hist)


def distribution_distance(d1: BallDistribution, d2: BallDistribution) -> Fraction:
    """Total variation distance between two ball laws at the same (r, m)."""
    if (d1.radius, d1.level) != (d2.radius, d2.level):
        raise ValueError("ball distributions taken at different (r, m)")
    codes = set(d1.histogram) | set(d2.histogram)
    zero = Fraction(0)
    return sum((abs(d1.histogram.get(c, zero) - d2.histogram.get(c, zero)) for c in codes), zero) / 2
