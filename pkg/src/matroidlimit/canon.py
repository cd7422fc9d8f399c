"""Canonical labeling and isomorphism testing for small directed graphs.

Both routines accept optional vertex colors (used to mark roots) and
optional edge labels (used for decorations).  Labels must be mutually
comparable; bytes and tuples of ints are what the rest of the package
passes in.

The canonical labeling is individualization-refinement: ordered color
refinement, then a backtracking search over individualizations of the
first non-singleton cell, keeping the lexicographically smallest leaf
certificate.  Automorphisms discovered at equal leaves prune siblings in
the same orbit.  :func:`find_isomorphism` is a separate, plain
backtracking matcher and serves as a cross-check.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Hashable, Sequence

from .graph import Graph, GraphError, UnionFind

DEFAULT_VERTEX_LIMIT = 20


@dataclass(frozen=True)
class CanonicalForm:
    code: bytes
    relabeling: tuple[int, ...]

    @property
    def class_id(self) -> str:
        """Short content address of the isomorphism class."""
        return hashlib.sha256(self.code).hexdigest()

    def inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.relabeling)
        for v, p in enumerate(self.relabeling):
            inv[p] = v
        return tuple(inv)


def _rank(values: Sequence) -> list[int]:
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


class _Labeler:
    def __init__(self, n, edges, vertex_colors, label_ids):
        self.n = n
        self.edges = edges
        self.label_ids = label_ids
        self.out = [[] for _ in range(n)]
        self.inn = [[] for _ in range(n)]
        for (t, h), lab in zip(edges, label_ids):
            self.out[t].append((h, lab))
            self.inn[h].append((t, lab))
        self.vertex_colors = list(vertex_colors)
        self.best = None
        self.best_perm = None
        self.generators: list[list[int]] = []

    def refine(self, colors: list[int]) -> list[int]:
        ncls = len(set(colors))
        while True:
            sig = [
                (
                    colors[v],
                    tuple(sorted((colors[u], lab) for u, lab in self.out[v])),
                    tuple(sorted((colors[u], lab) for u, lab in self.inn[v])),
                )
                for v in range(self.n)
            ]
            colors = _rank(sig)
            new = len(set(colors))
            if new == ncls:
                return colors
            ncls = new

    def certificate(self, pos: list[int]):
        edges = sorted((pos[t], pos[h], lab) for (t, h), lab in zip(self.edges, self.label_ids))
        vcol = [0] * self.n
        for v in range(self.n):
            vcol[pos[v]] = self.vertex_colors[v]
        return (tuple(vcol), tuple(edges))

    def search(self, colors: list[int], fixed: list[int]):
        colors = self.refine(colors)
        if len(set(colors)) == self.n:
            cert = self.certificate(colors)
            if self.best is None or cert < self.best:
                self.best, self.best_perm = cert, colors
            elif cert == self.best:
                # colors[v] == best_perm[w] defines an automorphism v -> w
                where = {p: w for w, p in enumerate(self.best_perm)}
                self.generators.append([where[colors[v]] for v in range(self.n)])
            return
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next(cells[c] for c in sorted(cells) if len(cells[c]) > 1)
        explored: list[int] = []
        for v in target:
            if explored and self._same_orbit(v, explored, fixed):
                continue
            explored.append(v)
            child = [2 * c + (0 if u == v else 1) for u, c in enumerate(colors)]
            self.search(_rank(child), fixed + [v])

    def _same_orbit(self, v: int, explored: list[int], fixed: list[int]) -> bool:
        gens = [g for g in self.generators if all(g[x] == x for x in fixed)]
        if not gens:
            return False
        uf = UnionFind(self.n)
        for g in gens:
            for x in range(self.n):
                uf.union(x, g[x])
        root = uf.find(v)
        return any(uf.find(u) == root for u in explored)


def canonical_labeling(
    n: int,
    edges: Sequence[tuple[int, int]],
    vertex_colors: Sequence[int] | None = None,
    edge_labels: Sequence[Hashable] | None = None,
) -> CanonicalForm:
    """Canonical form of a directed graph with optional vertex/edge colors.

    Two inputs get equal codes iff some vertex bijection preserves directed
    edges, vertex colors and edge labels.
    """
    vertex_colors = [0] * n if vertex_colors is None else list(vertex_colors)
    if edge_labels is None:
        labels: list = [()] * len(edges)
    else:
        labels = list(edge_labels)
    label_table = sorted(set(labels))
    label_ids = _rank(labels) if labels else []
    lab = _Labeler(n, list(edges), vertex_colors, label_ids)
    if n == 0:
        return CanonicalForm(repr((0, (), (), ())).encode(), ())
    lab.search(_rank(vertex_colors), [])
    vcol, cert_edges = lab.best
    code = repr((n, vcol, cert_edges, tuple(label_table))).encode()
    return CanonicalForm(code, tuple(lab.best_perm))


def canonical_form(g: Graph, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> CanonicalForm:
    """Canonical form of ``g`` as a directed graph.

    ``relabeling[v]`` is the position of ``v`` in the canonical
    representative :func:`canonical_representative`.
    """
    if g.vertex_count > vertex_limit:
        raise GraphError(
            f"canonical labeling is limited to {vertex_limit} vertices, got {g.vertex_count}"
        )
    return canonical_labeling(g.vertex_count, g.edges)


def canonical_representative(g: Graph, form: CanonicalForm | None = None) -> tuple[Graph, tuple[int, ...]]:
    """The fixed representative of ``[g]`` and the edge map ``g -> representative``.

    The representative has vertices in canonical order and edges sorted by
    (tail, head); the returned tuple sends each edge id of ``g`` to the id of
    its image.
    """
    form = form or canonical_form(g)
    pos = form.relabeling
    images = [(pos[t], pos[h]) for t, h in g.edges]
    order = sorted(range(g.edge_count), key=lambda e: images[e])
    rep = Graph(g.vertex_count, tuple(images[e] for e in order), g.degree_bound)
    edge_map = [0] * g.edge_count
    for new_id, e in enumerate(order):
        edge_map[e] = new_id
    return rep, tuple(edge_map)


def find_isomorphism(
    n1: int,
    edges1: Sequence[tuple[int, int]],
    n2: int,
    edges2: Sequence[tuple[int, int]],
    colors1: Sequence[Hashable] | None = None,
    colors2: Sequence[Hashable] | None = None,
    labels1: Sequence[Hashable] | None = None,
    labels2: Sequence[Hashable] | None = None,
) -> list[int] | None:
    """Backtracking search for a bijection preserving edges, directions and colors.

    Returns ``phi`` with ``phi[v]`` the image of vertex ``v``, or ``None``.
    Candidates are pruned by a local signature: vertex color plus the
    multisets of labels on out- and in-edges.
    """
    if n1 != n2 or len(edges1) != len(edges2):
        return None
    colors1 = [0] * n1 if colors1 is None else list(colors1)
    colors2 = [0] * n2 if colors2 is None else list(colors2)
    labels1 = [None] * len(edges1) if labels1 is None else list(labels1)
    labels2 = [None] * len(edges2) if labels2 is None else list(labels2)

    def tables(n, edges, labels):
        arcs = {}
        out = [[] for _ in range(n)]
        inn = [[] for _ in range(n)]
        for (t, h), lab in zip(edges, labels):
            arcs[(t, h)] = lab
            out[t].append((h, lab))
            inn[h].append((t, lab))
        return arcs, out, inn

    arcs1, out1, inn1 = tables(n1, edges1, labels1)
    arcs2, out2, inn2 = tables(n2, edges2, labels2)

    def signature(colors, out, inn, v):
        return (
            colors[v],
            tuple(sorted(map(repr, (lab for _, lab in out[v])))),
            tuple(sorted(map(repr, (lab for _, lab in inn[v])))),
        )

    sig1 = [signature(colors1, out1, inn1, v) for v in range(n1)]
    sig2 = [signature(colors2, out2, inn2, v) for v in range(n2)]
    if sorted(sig1) != sorted(sig2):
        return None

    # match in BFS order so each new vertex usually has a mapped neighbor
    nbr1 = [[u for u, _ in out1[v]] + [u for u, _ in inn1[v]] for v in range(n1)]
    nbr2 = [[u for u, _ in out2[v]] + [u for u, _ in inn2[v]] for v in range(n2)]
    order: list[int] = []
    seen = [False] * n1
    freq: dict = {}
    for sg in sig1:
        freq[sg] = freq.get(sg, 0) + 1
    for s in sorted(range(n1), key=lambda v: (freq[sig1[v]], v)):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in nbr1[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)

    phi = [-1] * n1
    used = [False] * n2

    def consistent(v, w):
        for u, lab in out1[v]:
            if phi[u] >= 0 and arcs2.get((w, phi[u]), _MISSING) != lab:
                return False
        for u, lab in inn1[v]:
            if phi[u] >= 0 and arcs2.get((phi[u], w), _MISSING) != lab:
                return False
        return True

    def extend(i):
        if i == n1:
            return True
        v = order[i]
        mapped = [phi[u] for u in nbr1[v] if phi[u] >= 0]
        cands = nbr2[mapped[0]] if mapped else range(n2)
        for w in dict.fromkeys(cands):
            if used[w] or sig2[w] != sig1[v] or not consistent(v, w):
                continue
            phi[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            phi[v] = -1
            used[w] = False
        return False

    return list(phi) if extend(0) else None


_MISSING = object()


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1.vertex_count, g1.edges, g2.vertex_count, g2.edges) is not None
