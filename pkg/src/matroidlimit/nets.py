"""Finite 2^-n nets of coloring space, their registry, and edge decorations.

A net for ``(k, n)`` is built over a fixed grid on the cube
``[0,1]^(2^k)``: ``side(k, n)`` cell centers per axis, chosen so the grid
covers the cube within ``2^-(n+2)``.  Each grid point is assigned the
lowest-index coloring whose quotient lies within ``2^-(n+1)`` of it,
otherwise coloring index 0 (all edges color 1).  Any coloring then has a
listed coloring within ``2^-n``.  The list length ``side**(2**k)`` does not
depend on the graph, which keeps decorations index-aligned across graphs.

Most grid points are far from every quotient and fall back to the default
coloring, so a :class:`NetList` stores only the grid points that override it.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .canon import canonical_form, canonical_representative
from .graph import Graph
from .quotient import (
    BudgetExceeded,
    batch_ranks,
    check_budget,
    index_to_colors,
    point_table,
    sample_colorings,
)

FORMAT_VERSION = 1
DEFAULT_WINDOW = ((1, 1), (2, 1), (2, 2))


class MissingNet(KeyError):
    pass


def grid_side(k: int, n: int) -> int:
    """Smallest ``s`` with ``1/s <= 2^-(n+1) / sqrt(2^k)``."""
    target = 4 ** (n + 1) * 2**k
    s = math.isqrt(target)
    return s if s * s == target else s + 1


def net_size(k: int, n: int) -> int:
    """``M(k, n)``: number of grid points, identical for every graph."""
    return grid_side(k, n) ** (2**k)


@dataclass(frozen=True)
class NetList:
    """Ordered list of ``size`` colorings, default everywhere but ``overrides``."""

    k: int
    n: int
    size: int
    default: tuple[int, ...]
    overrides: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def __len__(self) -> int:
        return self.size

    def __getitem__(self, i: int) -> tuple[int, ...]:
        if not 0 <= i < self.size:
            raise IndexError(i)
        return self.overrides.get(i, self.default)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        for i in range(self.size):
            yield self[i]

    def distinct(self) -> list[tuple[int, ...]]:
        """Distinct colorings in list order of first appearance."""
        first_default = 0
        while first_default in self.overrides:
            first_default += 1
        seen = {}
        for i in sorted(self.overrides):
            if first_default < i and first_default < self.size:
                seen.setdefault(self.default, None)
            seen.setdefault(self.overrides[i], None)
        if first_default < self.size:
            seen.setdefault(self.default, None)
        return list(seen)

    def without(self, coloring: Sequence[int]) -> list[tuple[int, ...]]:
        """Distinct members left after deleting every occurrence of ``coloring``."""
        coloring = tuple(coloring)
        return [c for c in self.distinct() if c != coloring]

    def pullback(self, edge_map: Sequence[int]) -> "NetList":
        """Compose every coloring with the edge map ``e -> edge_map[e]``."""
        def pull(c):
            return tuple(c[edge_map[e]] for e in range(len(edge_map)))
        return NetList(
            self.k, self.n, self.size, pull(self.default),
            {i: pull(c) for i, c in self.overrides.items()},
        )

    def edge_key(self, e: int) -> tuple:
        """Exact, comparable stand-in for the tuple ``(alpha_i(e))_i``."""
        d = self.default[e] if self.default else 0
        if len(self.overrides) < self.size:
            exc = tuple((i, c[e]) for i, c in sorted(self.overrides.items()) if c[e] != d)
            return (d, exc)
        return (-1, tuple(c[e] for _, c in sorted(self.overrides.items())))

    def to_doc(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "size": self.size,
            "default": list(self.default),
            "overrides": [[i, list(c)] for i, c in sorted(self.overrides.items())],
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "NetList":
        return cls(
            int(doc["k"]), int(doc["n"]), int(doc["size"]), tuple(doc["default"]),
            {int(i): tuple(c) for i, c in doc["overrides"]},
        )


def build_net(g: Graph, k: int, n: int, budget: int = 10**7) -> NetList:
    """Grid-anchored 2^-n net of the k-colorings of ``g`` (exhaustive scan)."""
    try:
        check_budget(g, k, budget)
    except BudgetExceeded as exc:
        raise BudgetExceeded(exc.required, exc.budget, k) from None
    m = g.edge_count
    side = grid_side(k, n)
    dim = 2**k
    nv = g.vertex_count
    table = point_table(g, k)
    # grid center (2j+1)/(2 side), point r/nv; scale both by 2*side*nv
    # squared distance <= 4^-(n+1)  <=>  sum diff^2 * 4^(n+1) <= (2 side nv)^2
    limit_sq = (2 * side * nv) ** 2
    factor = 4 ** (n + 1)
    overrides: dict[int, tuple[int, ...]] = {}
    claimed: set[int] = set()
    for ranks, idx in sorted(table.items(), key=lambda kv: kv[1]):
        scaled = [2 * side * r for r in ranks]
        for cell in _cells_within_exact(scaled, side, nv, limit_sq, factor):
            gi = 0
            for j in cell:
                gi = gi * side + j
            if gi in claimed:
                continue
            claimed.add(gi)
            if idx != 0:
                overrides[gi] = index_to_colors(idx, k, m)
    return NetList(k, n, side**dim, index_to_colors(0, k, m), overrides)


def _cells_within_exact(scaled, side, nv, limit_sq, factor):
    d = len(scaled)

    def rec(c, partial, prefix):
        if c == d:
            yield tuple(prefix)
            return
        x = scaled[c]
        j0 = min(side - 1, max(0, (x // nv - 1) // 2))
        for j in range(j0, side):
            diff = (2 * j + 1) * nv - x
            total = partial + diff * diff * factor
            if total > limit_sq:
                if diff > 0:
                    break
                continue
            prefix.append(j)
            yield from rec(c + 1, total, prefix)
            prefix.pop()
        for j in range(j0 - 1, -1, -1):
            diff = (2 * j + 1) * nv - x
            total = partial + diff * diff * factor
            if total > limit_sq:
                if diff < 0:
                    break
                continue
            prefix.append(j)
            yield from rec(c + 1, total, prefix)
            prefix.pop()

    yield from rec(0, 0, [])


# -- net verification ----------------------------------------------------------

def _rank_rows(g: Graph, k: int, colorings: Sequence[Sequence[int]]) -> np.ndarray:
    arr = np.array(colorings, dtype=np.int64).reshape(len(colorings), g.edge_count)
    return batch_ranks(g, arr, k)


def net_violations(
    g: Graph, k: int, n: int, members: Sequence[Sequence[int]], budget: int = 10**7
) -> list[tuple[int, ...]]:
    """Colorings of ``g`` with no member within ``2^-n`` (exhaustive, exact).

    One witness coloring is returned per uncovered quotient point.
    """
    check_budget(g, k, budget)
    table = point_table(g, k)
    pts = np.array(list(table.keys()), dtype=np.int64)
    keys = list(table.items())
    if not members:
        return [index_to_colors(idx, k, g.edge_count) for _, idx in keys]
    net_pts = np.unique(_rank_rows(g, k, members), axis=0)
    # squared distance in units of 1/nv^2; covered iff d2 * 4^n <= nv^2
    d2 = ((pts[:, None, :] - net_pts[None, :, :]) ** 2).sum(axis=2).min(axis=1)
    bad = np.nonzero(d2 * 4**n > g.vertex_count**2)[0]
    return [index_to_colors(keys[i][1], k, g.edge_count) for i in bad]


def is_net(g: Graph, k: int, n: int, members: Sequence[Sequence[int]], budget: int = 10**7) -> bool:
    return not net_violations(g, k, n, members, budget)


def necessary_members(g: Graph, k: int, n: int, net: NetList, budget: int = 10**7) -> list[tuple[int, ...]]:
    """Members whose removal (all occurrences) breaks the net property."""
    return [c for c in net.distinct() if not is_net(g, k, n, net.without(c), budget)]


def greedy_net_from_colorings(
    g: Graph, k: int, n: int, colorings: Sequence[Sequence[int]]
) -> list[tuple[int, ...]]:
    """Farthest-point-first cover of the given colorings at radius ``2^-n``.

    Starts from the first coloring; ties go to the lowest position.
    """
    rows = _rank_rows(g, k, colorings)
    nv2 = g.vertex_count**2
    chosen = [0]
    best = ((rows - rows[0]) ** 2).sum(axis=1)
    while True:
        far = int(np.argmax(best))
        if best[far] * 4**n <= nv2:
            break
        chosen.append(far)
        best = np.minimum(best, ((rows - rows[far]) ** 2).sum(axis=1))
    return [tuple(int(c) for c in colorings[i]) for i in chosen]


def greedy_net(g: Graph, k: int, n: int, samples: int, seed: int) -> list[tuple[int, ...]]:
    """Greedy net over sampled colorings; covers the sample, not necessarily all colorings."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    colorings = sample_colorings(g.edge_count, k, samples, seed)
    return greedy_net_from_colorings(g, k, n, colorings.tolist())


# -- registry ----------------------------------------------------------------

@dataclass
class NetRegistry:
    """Nets of canonical representatives keyed by ``(class id, k, n)``."""

    seed: int = 0
    entries: dict[tuple[str, int, int], NetList] = field(default_factory=dict)

    def m_table(self) -> dict[tuple[int, int], int]:
        return {(k, n): net_size(k, n) for _, k, n in self.entries}

    def build(self, g: Graph, k: int, n: int, budget: int = 10**7) -> NetList:
        """Build (or fetch) the net of ``g``'s canonical representative."""
        form = canonical_form(g)
        key = (form.class_id, k, n)
        if key not in self.entries:
            rep, _ = canonical_representative(g, form)
            try:
                self.entries[key] = build_net(rep, k, n, budget)
            except BudgetExceeded as exc:
                raise BudgetExceeded(exc.required, exc.budget, k) from None
        return self.entries[key]

    def build_window(self, g: Graph, window: Iterable[tuple[int, int]], budget: int = 10**7) -> None:
        for k, n in window:
            self.build(g, k, n, budget)

    def to_json(self) -> str:
        doc = {
            "format_version": FORMAT_VERSION,
            "seed": self.seed,
            "M_table": {f"{k},{n}": v for (k, n), v in sorted(self.m_table().items())},
            "entries": [
                {"class": cid, **net.to_doc()}
                for (cid, k, n), net in sorted(self.entries.items())
            ],
        }
        return json.dumps(doc, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "NetRegistry":
        doc = json.loads(text)
        if doc.get("format_version") != FORMAT_VERSION:
            raise ValueError(f"unsupported registry format {doc.get('format_version')!r}")
        reg = cls(seed=int(doc["seed"]))
        for entry in doc["entries"]:
            net = NetList.from_doc(entry)
            if net.size != net_size(net.k, net.n):
                raise ValueError(f"registry net for ({net.k},{net.n}) has size {net.size}")
            reg.entries[(entry["class"], net.k, net.n)] = net
        return reg

    def save(self, path: str) -> None:
        with open(path, "w") as fh:
            fh.write(self.to_json())

    @classmethod
    def load(cls, path: str) -> "NetRegistry":
        with open(path) as fh:
            return cls.from_json(fh.read())


def transported_net(h: Graph, registry: NetRegistry, k: int, n: int) -> NetList:
    """``A_{H,k,n}``: the representative's net composed with the fixed isomorphism."""
    form = canonical_form(h)
    key = (form.class_id, k, n)
    if key not in registry.entries:
        raise MissingNet(
            f"no net for this graph class at (k={k}, n={n}); build it into the registry first"
        )
    _, edge_map = canonical_representative(h, form)
    return registry.entries[key].pullback(edge_map)


# -- decorations -------------------------------------------------------------

@dataclass(frozen=True)
class Decoration:
    """Truncated decoration ``chi_G``: one net list per ``(k, n)`` in the window.

    Pairs outside the window are treated as the constant color 1, so an
    empty window is the constant decoration.
    """

    edge_count: int
    blocks: tuple[NetList, ...] = ()

    @classmethod
    def constant(cls, edge_count: int) -> "Decoration":
        return cls(edge_count, ())

    @property
    def window(self) -> tuple[tuple[int, int], ...]:
        return tuple((b.k, b.n) for b in self.blocks)

    @property
    def arity(self) -> int:
        return sum(b.size for b in self.blocks)

    def edge_tuple(self, e: int) -> tuple[int, ...]:
        """Materialized color tuple of edge ``e`` in (k, n, i) order."""
        return tuple(c[e] for b in self.blocks for c in b)

    def edge_keys(self, m: int | None = None) -> list[tuple]:
        """Exact per-edge keys of the projection ``P_m`` (all blocks if ``m`` is None)."""
        blocks = [b for b in self.blocks if m is None or (b.k <= m and b.n <= m)]
        return [tuple(((b.k, b.n), b.edge_key(e)) for b in blocks) for e in range(self.edge_count)]

    def labels(self, m: int | None = None) -> list[bytes]:
        """Compact digests of :meth:`edge_keys`, suitable as edge labels."""
        return [hashlib.blake2b(repr(key).encode(), digest_size=16).digest() for key in self.edge_keys(m)]

    def to_json(self) -> str:
        doc = {"edge_count": self.edge_count, "blocks": [b.to_doc() for b in self.blocks]}
        return json.dumps(doc, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Decoration":
        doc = json.loads(text)
        return cls(int(doc["edge_count"]), tuple(NetList.from_doc(b) for b in doc["blocks"]))


def decorate(g: Graph, registry: NetRegistry, window: Iterable[tuple[int, int]] = DEFAULT_WINDOW) -> Decoration:
    blocks = tuple(transported_net(g, registry, k, n) for k, n in sorted(set(window)))
    return Decoration(g.edge_count, blocks)


def check_decoration_injective(g: Graph, decoration: Decoration) -> tuple[bool, tuple[int, int] | None]:
    """Whether distinct edges carry distinct tuples; else a colliding pair."""
    if decoration.edge_count != g.edge_count:
        raise ValueError("decoration does not cover the graph's edges")
    first: dict[tuple, int] = {}
    for e, key in enumerate(decoration.edge_keys()):
        if key in first:
            return False, (first[key], e)
        first[key] = e
    return True, None
