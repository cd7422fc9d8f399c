"""k-quotients of a cycle-matroid rank function and the distances between them.

A k-edge-coloring ``alpha`` pushes the normalized rank forward to a set
function on the subsets of ``[k]``; that set function is stored as a vector
of length ``2**k`` in binary-counter subset order (bit ``i-1`` set means
color ``i`` is in the subset, empty set first).

Colorings of a graph with ``m`` edges are indexed by integers in
``[0, k**m)``: the index written in base ``k`` with edge 0 as the most
significant digit, each digit plus one giving the color.  Index order is
therefore lexicographic order of color tuples.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial.distance import cdist

from .graph import Graph, GraphError, normalized_rank

CHUNK = 1 << 15


class BudgetExceeded(RuntimeError):
    """Exhaustive enumeration would exceed the allowed number of colorings."""

    def __init__(self, required: int, budget: int, k: int | None = None):
        self.required = required
        self.budget = budget
        self.k = k
        where = f" at k={k}" if k is not None else ""
        super().__init__(
            f"exhaustive enumeration needs {required} colorings{where} but the budget is {budget}; "
            "use sampling instead"
        )


@dataclass(frozen=True)
class EdgeColoring:
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.k < 1:
            raise GraphError("k must be positive")
        for c in self.colors:
            if not 1 <= c <= self.k:
                raise GraphError(f"color {c} outside [1, {self.k}]")

    def preimage(self, subset_mask: int) -> list[int]:
        return [e for e, c in enumerate(self.colors) if subset_mask >> (c - 1) & 1]


@dataclass(frozen=True)
class QuotientPoint:
    k: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != 1 << self.k:
            raise ValueError(f"a {self.k}-quotient has {1 << self.k} coordinates, got {len(coords)}")

    def as_floats(self) -> np.ndarray:
        return np.array([float(c) for c in self.coords])

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coords]

    @classmethod
    def from_json(cls, k: int, coords: Sequence[str]) -> "QuotientPoint":
        return cls(k, tuple(Fraction(c) for c in coords))


@dataclass(frozen=True)
class QuotientSet:
    k: int
    points: tuple[QuotientPoint, ...]
    exact: bool
    samples: int | None = None
    seed: int | None = None

    @property
    def collisions(self) -> int | None:
        """Number of sampled colorings that repeated an already-seen point."""
        if self.samples is None:
            return None
        return self.samples - len(self.points)

    def as_array(self) -> np.ndarray:
        return np.array([p.as_floats() for p in self.points]).reshape(len(self.points), 1 << self.k)

    def point_set(self) -> frozenset[QuotientPoint]:
        return frozenset(self.points)

    def to_json(self) -> str:
        doc = {
            "k": self.k,
            "exact": self.exact,
            "samples": self.samples,
            "seed": self.seed,
            "points": [p.to_json() for p in self.points],
        }
        return json.dumps(doc, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "QuotientSet":
        doc = json.loads(text)
        k = int(doc["k"])
        return cls(
            k,
            tuple(QuotientPoint.from_json(k, p) for p in doc["points"]),
            bool(doc["exact"]),
            doc.get("samples"),
            doc.get("seed"),
        )


@dataclass(frozen=True)
class DistanceInterval:
    lower: float
    upper: float
    K: int | None = None
    mode: str = "exact"
    estimate: bool = False
    terms: tuple[float, ...] = ()
    seed: int | None = None
    samples: int | None = None
    exact_levels: tuple[bool, ...] = field(default=())

    def __post_init__(self):
        if not (math.isfinite(self.lower) and math.isfinite(self.upper)):
            raise ValueError("distance interval bounds must be finite")
        if self.lower < 0 or self.upper < self.lower:
            raise ValueError(f"malformed interval [{self.lower}, {self.upper}]")

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def to_json(self) -> str:
        doc = {
            "lower": self.lower,
            "upper": self.upper,
            "K": self.K,
            "mode": self.mode,
            "estimate": self.estimate,
            "terms": list(self.terms),
            "exact_levels": list(self.exact_levels),
            "seed": self.seed,
            "samples": self.samples,
        }
        return json.dumps(doc, sort_keys=True) + "\n"


def derive_seed(seed: int, *keys: int) -> int:
    """Independent 64-bit seed for a named sub-stream of ``seed``."""
    ss = np.random.SeedSequence([seed & (2**64 - 1), *keys])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


# -- quotient points -------------------------------------------------------

def quotient_point(g: Graph, alpha: EdgeColoring) -> QuotientPoint:
    """``rho_G o alpha^{-1}`` evaluated on every subset of ``[k]``."""
    if len(alpha.colors) != g.edge_count:
        raise GraphError(
            f"coloring has {len(alpha.colors)} entries but the graph has {g.edge_count} edges"
        )
    coords = [normalized_rank(g, alpha.preimage(mask)) for mask in range(1 << alpha.k)]
    return QuotientPoint(alpha.k, tuple(coords))


def index_to_colors(index: int, k: int, m: int) -> tuple[int, ...]:
    digits = []
    for _ in range(m):
        index, d = divmod(index, k)
        digits.append(d + 1)
    return tuple(reversed(digits))


def colors_to_index(colors: Sequence[int], k: int) -> int:
    index = 0
    for c in colors:
        index = index * k + (c - 1)
    return index


def _indices_to_colors(idx: np.ndarray, k: int, m: int) -> np.ndarray:
    powers = np.array([k ** (m - 1 - e) for e in range(m)], dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % k + 1


def batch_ranks(g: Graph, colors: np.ndarray, k: int) -> np.ndarray:
    """Integer matroid ranks ``|V| - c(alpha^{-1}(A))`` for many colorings at once.

    ``colors`` has shape ``(N, m)`` with entries in ``1..k``; the result has
    shape ``(N, 2**k)``.  Each coloring is laid out as its own block of
    ``|V|`` vertices in one large sparse graph so a single
    connected-components pass counts components for every block.
    """
    n_rows = colors.shape[0]
    nv = g.vertex_count
    out = np.zeros((n_rows, 1 << k), dtype=np.int64)
    if n_rows == 0:
        return out
    if g.edge_count == 0:
        return out
    ends = np.array(g.edges, dtype=np.int64)
    bits = np.left_shift(1, colors.astype(np.int64) - 1)
    offsets = (np.arange(n_rows, dtype=np.int64) * nv)[:, None]
    tails = offsets + ends[None, :, 0]
    heads = offsets + ends[None, :, 1]
    total = n_rows * nv
    block_of_node = np.arange(total, dtype=np.int64) // nv
    for mask in range(1, 1 << k):
        sel = (bits & mask) != 0
        if not sel.any():
            continue
        src, dst = tails[sel], heads[sel]
        adj = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(total, total))
        ncomp, labels = connected_components(adj, directed=False)
        block_of_label = np.empty(ncomp, dtype=np.int64)
        block_of_label[labels] = block_of_node
        counts = np.bincount(block_of_label, minlength=n_rows)
        out[:, mask] = nv - counts
    return out


def point_table(g: Graph, k: int, start: int = 0, stop: int | None = None) -> dict[tuple[int, ...], int]:
    """Distinct rank vectors over coloring indices ``[start, stop)``.

    Maps each integer rank vector to the lowest coloring index producing it.
    Tables for disjoint index ranges merge with :func:`merge_point_tables`,
    so the enumeration can be split across workers.
    """
    m = g.edge_count
    total = k**m
    stop = total if stop is None else min(stop, total)
    table: dict[tuple[int, ...], int] = {}
    for lo in range(start, stop, CHUNK):
        hi = min(lo + CHUNK, stop)
        idx = np.arange(lo, hi, dtype=np.int64)
        ranks = batch_ranks(g, _indices_to_colors(idx, k, m), k)
        uniq, first = np.unique(ranks, axis=0, return_index=True)
        for row, pos in zip(uniq, first):
            key = tuple(int(x) for x in row)
            if key not in table:
                table[key] = lo + int(pos)
    return table


def merge_point_tables(*tables: dict[tuple[int, ...], int]) -> dict[tuple[int, ...], int]:
    merged: dict[tuple[int, ...], int] = {}
    for t in tables:
        for key, idx in t.items():
            if key not in merged or idx < merged[key]:
                merged[key] = idx
    return merged


def _ranks_to_point(ranks: Sequence[int], k: int, nv: int) -> QuotientPoint:
    return QuotientPoint(k, tuple(Fraction(r, nv) for r in ranks))


def check_budget(g: Graph, k: int, budget: int) -> int:
    required = k**g.edge_count
    if required > budget:
        raise BudgetExceeded(required, budget, k)
    return required


def quotient_set_exact(g: Graph, k: int, budget: int = 10**7) -> QuotientSet:
    """All k-quotients of ``g``, ordered by the first coloring attaining each."""
    if k < 1:
        raise GraphError("k must be positive")
    check_budget(g, k, budget)
    table = point_table(g, k)
    ordered = sorted(table.items(), key=lambda kv: kv[1])
    pts = tuple(_ranks_to_point(r, k, g.vertex_count) for r, _ in ordered)
    return QuotientSet(k, pts, exact=True)


def sample_colorings(m: int, k: int, samples: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(1, k + 1, size=(samples, m), dtype=np.int64)


def quotient_set_sampled(g: Graph, k: int, samples: int, seed: int) -> QuotientSet:
    """Distinct quotients of ``samples`` i.i.d. uniform colorings (an inner approximation)."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    colors = sample_colorings(g.edge_count, k, samples, seed)
    seen: dict[tuple[int, ...], None] = {}
    for lo in range(0, samples, CHUNK):
        ranks = batch_ranks(g, colors[lo:lo + CHUNK], k)
        uniq, first = np.unique(ranks, axis=0, return_index=True)
        for pos in np.sort(first):
            seen.setdefault(tuple(int(x) for x in ranks[pos]), None)
    pts = tuple(_ranks_to_point(r, k, g.vertex_count) for r in seen)
    return QuotientSet(k, pts, exact=False, samples=samples, seed=seed)


# -- distances -------------------------------------------------------------

def hausdorff(a: QuotientSet, b: QuotientSet) -> float:
    """Euclidean Hausdorff distance between two finite point sets (all pairs)."""
    if a.k != b.k:
        raise ValueError(f"cannot compare quotient sets with k={a.k} and k={b.k}")
    if not a.points or not b.points:
        raise ValueError("Hausdorff distance needs nonempty sets")
    d = cdist(a.as_array(), b.as_array())
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def point_distance(p: QuotientPoint, q: QuotientPoint) -> float:
    if p.k != q.k:
        raise ValueError(f"cannot compare quotients with k={p.k} and k={q.k}")
    return float(np.linalg.norm(p.as_floats() - q.as_floats()))


def dk_distance(g1: Graph, alpha1: EdgeColoring, g2: Graph, alpha2: EdgeColoring) -> float:
    if alpha1.k != alpha2.k:
        raise ValueError(f"colorings use k={alpha1.k} and k={alpha2.k}")
    return point_distance(quotient_point(g1, alpha1), quotient_point(g2, alpha2))


def tail_bound(K: int) -> float:
    """``sum_{k>K} 2^-k * sqrt(2^k)``: the most the omitted levels can contribute.

    Every k-quotient lies in the unit cube of dimension ``2**k``, whose
    diameter is ``sqrt(2**k)``.
    """
    return 2.0 ** (-(K + 1) / 2) / (1 - 2.0 ** -0.5)


def quotient_set(g: Graph, k: int, mode: str, budget: int, samples: int, seed: int) -> QuotientSet:
    """Exact or sampled Q_k according to ``mode`` (``exact``, ``sampled`` or ``auto``).

    ``auto`` enumerates when ``k**|E|`` fits the budget and samples otherwise.
    Sampling seeds depend only on ``(seed, k)`` so equal graphs get equal sets.
    """
    if mode == "exact":
        return quotient_set_exact(g, k, budget)
    if mode == "auto" and k**g.edge_count <= budget:
        return quotient_set_exact(g, k, budget)
    if mode in ("sampled", "auto"):
        return quotient_set_sampled(g, k, samples, derive_seed(seed, k))
    raise ValueError(f"unknown mode {mode!r}")


def dq_from_sets(
    sets1: Sequence[QuotientSet],
    sets2: Sequence[QuotientSet],
    mode: str = "exact",
    seed: int | None = None,
    samples: int | None = None,
) -> DistanceInterval:
    """Truncated d_Q from precomputed ``Q_1..Q_K`` of two graphs."""
    K = len(sets1)
    if K != len(sets2) or K < 1:
        raise ValueError("need the same nonzero number of levels for both graphs")
    terms = tuple(hausdorff(a, b) for a, b in zip(sets1, sets2))
    exact_levels = tuple(a.exact and b.exact for a, b in zip(sets1, sets2))
    lower = math.fsum(2.0 ** -(k + 1) * t for k, t in enumerate(terms))
    return DistanceInterval(
        lower,
        lower + tail_bound(K),
        K=K,
        mode=mode,
        estimate=not all(exact_levels),
        terms=terms,
        seed=seed,
        samples=samples,
        exact_levels=exact_levels,
    )


def dq_truncated(
    g1: Graph,
    g2: Graph,
    K: int,
    mode: str = "exact",
    budget: int = 10**7,
    samples: int = 10**5,
    seed: int = 0,
) -> DistanceInterval:
    """``sum_{k<=K} 2^-k d_Haus(Q_k(g1), Q_k(g2))`` plus a certified tail.

    In exact mode the interval contains the full series.  Sampled terms
    carry no one-sided guarantee, so the interval is then flagged as an
    estimate.
    """
    if K < 1:
        raise ValueError("truncation level K must be at least 1")
    if mode == "exact":
        for k in range(1, K + 1):
            for g in (g1, g2):
                check_budget(g, k, budget)
    sets1 = [quotient_set(g1, k, mode, budget, samples, seed) for k in range(1, K + 1)]
    sets2 = [quotient_set(g2, k, mode, budget, samples, seed) for k in range(1, K + 1)]
    sampled = mode != "exact"
    return dq_from_sets(
        sets1, sets2, mode=mode,
        seed=seed if sampled else None,
        samples=samples if sampled else None,
    )


# -- lattice axioms ----------------------------------------------------------

def point_axiom_violations(p: QuotientPoint) -> list[str]:
    """Exact check of ``f(empty)=0``, monotonicity and submodularity."""
    c = p.coords
    n = len(c)
    out = []
    if c[0] != 0:
        out.append("value on the empty set is nonzero")
    for a in range(n):
        for b in range(n):
            if a & b == a and c[a] > c[b]:
                out.append(f"monotonicity fails for {a:b} within {b:b}")
            if a < b and c[a | b] + c[a & b] > c[a] + c[b]:
                out.append(f"submodularity fails for {a:b}, {b:b}")
    return out
