"""Oracle cross-checks runnable from the command line.

Each check declares roughly how many colorings (or comparable units of
work) it enumerates and is skipped when that exceeds the budget.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import oracles
from .corpus import connected_corpus, corpus
from .generators import cycle, path
from .graph import Graph, normalized_rank, normalized_rank_vertex_average
from .nets import (
    NetRegistry,
    build_net,
    check_decoration_injective,
    decorate,
    is_net,
    necessary_members,
)
from .omega import ball, rooted_iso
from .quotient import (
    EdgeColoring,
    QuotientPoint,
    QuotientSet,
    dk_distance,
    hausdorff,
    point_axiom_violations,
    quotient_point,
    quotient_set_exact,
    quotient_set_sampled,
)

PASS, FAIL, SKIP = "pass", "fail", "skip"
EXIT_PASS, EXIT_FAIL, EXIT_SKIPPED = 0, 1, 3

RankFn = Callable[[Graph, list], Fraction]


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str


@dataclass
class VerifyResult:
    checks: list[CheckResult]

    @property
    def exit_code(self) -> int:
        statuses = {c.status for c in self.checks}
        if FAIL in statuses:
            return EXIT_FAIL
        if statuses <= {SKIP}:
            return EXIT_SKIPPED
        return EXIT_PASS

    def table(self) -> str:
        width = max(len(c.name) for c in self.checks)
        lines = [f"{c.name:<{width}}  {c.status.upper():<4}  {c.detail}" for c in self.checks]
        return "\n".join(lines)


def _random_graph(rng: random.Random, max_v=12, max_d=4) -> Graph:
    n = rng.randint(1, max_v)
    d = rng.randint(1, max_d)
    deg = [0] * n
    edges = []
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rng.shuffle(pairs)
    for a, b in pairs:
        if deg[a] < d and deg[b] < d and rng.random() < 0.5:
            edges.append((a, b) if rng.random() < 0.5 else (b, a))
            deg[a] += 1
            deg[b] += 1
    return Graph(n, tuple(edges), d)


def check_rank_identity(rank_fn: RankFn, rng: random.Random, graphs=200, subsets=50) -> CheckResult:
    for _ in range(graphs):
        g = _random_graph(rng)
        for _ in range(subsets):
            f = [e for e in range(g.edge_count) if rng.random() < 0.5]
            lhs, rhs = rank_fn(g, f), normalized_rank_vertex_average(g, f)
            if lhs != rhs:
                return CheckResult("rank_identity", FAIL, f"{lhs} != {rhs} on {g.edges} with F={f}")
    return CheckResult("rank_identity", PASS, f"{graphs * subsets} (graph, subset) pairs")


def check_rank_lattice(rank_fn: RankFn) -> CheckResult:
    """Normalization, monotonicity and submodularity over all subset pairs."""
    count = 0
    for name, g in corpus().items():
        if g.edge_count > 6:
            continue
        subsets = [frozenset(s) for r in range(g.edge_count + 1)
                   for s in itertools.combinations(range(g.edge_count), r)]
        val = {s: rank_fn(g, sorted(s)) for s in subsets}
        if val[frozenset()] != 0:
            return CheckResult("rank_lattice", FAIL, f"{name}: rank of the empty set is {val[frozenset()]}")
        for a in subsets:
            for b in subsets:
                count += 1
                if a <= b and val[a] > val[b]:
                    return CheckResult("rank_lattice", FAIL, f"{name}: monotonicity fails")
                if val[a | b] + val[a & b] > val[a] + val[b]:
                    return CheckResult("rank_lattice", FAIL, f"{name}: submodularity fails")
    return CheckResult("rank_lattice", PASS, f"{count} subset pairs")


def check_exact_vs_brute() -> CheckResult:
    n = 0
    for name, g in corpus().items():
        if g.edge_count > 8:
            continue
        for k in (1, 2):
            fast = {p.coords for p in quotient_set_exact(g, k).points}
            if fast != oracles.brute_quotient_set(g, k):
                return CheckResult("exact_vs_brute", FAIL, f"{name}, k={k}")
            n += 1
    return CheckResult("exact_vs_brute", PASS, f"{n} (graph, k) cases")


def check_sampled_subset(samples=10**4) -> CheckResult:
    n = 0
    for name, g in corpus().items():
        if g.edge_count > 8:
            continue
        for k in (1, 2):
            exact = quotient_set_exact(g, k).point_set()
            if not quotient_set_sampled(g, k, samples, seed=n).point_set() <= exact:
                return CheckResult("sampled_subset", FAIL, f"{name}, k={k}")
            n += 1
    return CheckResult("sampled_subset", PASS, f"{n} cases of {samples} samples")


def check_k1_law() -> CheckResult:
    for name, g in connected_corpus().items():
        want = QuotientPoint(1, (Fraction(0), Fraction(g.vertex_count - 1, g.vertex_count)))
        if quotient_set_exact(g, 1).points != (want,):
            return CheckResult("connected_k1_law", FAIL, name)
    return CheckResult("connected_k1_law", PASS, f"{len(connected_corpus())} graphs")


def check_point_axioms(rng: random.Random, trials=2000) -> CheckResult:
    graphs = list(corpus().values())
    for _ in range(trials):
        g = rng.choice(graphs)
        k = rng.randint(1, 3)
        alpha = EdgeColoring(k, tuple(rng.randint(1, k) for _ in range(g.edge_count)))
        bad = point_axiom_violations(quotient_point(g, alpha))
        if bad:
            return CheckResult("quotient_point_axioms", FAIL, bad[0])
    return CheckResult("quotient_point_axioms", PASS, f"{trials} random colorings")


def check_nets() -> CheckResult:
    n = 0
    for g in (cycle(3), cycle(4), path(4)):
        for level in (1, 2):
            net = build_net(g, 2, level)
            if not is_net(g, 2, level, net.distinct()):
                return CheckResult("net_property", FAIL, f"{g.edges} n={level}")
            n += 1
    g = cycle(3)
    net = build_net(g, 2, 2)
    if not necessary_members(g, 2, 2, net):
        return CheckResult("net_property", FAIL, "mutation test found no necessary member")
    return CheckResult("net_property", PASS, f"{n} nets, mutation detected")


def check_metric_axioms(rng: random.Random, trials=2000) -> CheckResult:
    tol = 1e-12
    graphs = list(corpus().values())
    for _ in range(trials):
        k = rng.randint(1, 2)
        trio = []
        for _ in range(3):
            g = rng.choice(graphs)
            trio.append((g, EdgeColoring(k, tuple(rng.randint(1, k) for _ in range(g.edge_count)))))
        (g1, a1), (g2, a2), (g3, a3) = trio
        d12, d21 = dk_distance(g1, a1, g2, a2), dk_distance(g2, a2, g1, a1)
        d13, d23 = dk_distance(g1, a1, g3, a3), dk_distance(g2, a2, g3, a3)
        if abs(d12 - d21) > tol or dk_distance(g1, a1, g1, a1) != 0 or d13 > d12 + d23 + tol:
            return CheckResult("metric_axioms", FAIL, "dk_distance")
        sets = [_random_set(rng, k) for _ in range(3)]
        h = [[hausdorff(x, y) for y in sets] for x in sets]
        if abs(h[0][1] - h[1][0]) > tol or h[0][0] != 0 or h[0][2] > h[0][1] + h[1][2] + tol:
            return CheckResult("metric_axioms", FAIL, "hausdorff")
    return CheckResult("metric_axioms", PASS, f"{trials} random triples")


def _random_set(rng: random.Random, k: int) -> QuotientSet:
    pts = {
        QuotientPoint(k, tuple(Fraction(rng.randint(0, 12), 12) for _ in range(2**k)))
        for _ in range(rng.randint(1, 5))
    }
    return QuotientSet(k, tuple(sorted(pts, key=lambda p: p.coords)), exact=True)


def check_tau_injective(window=((2, 1), (2, 2))) -> CheckResult:
    reg = NetRegistry(seed=0)
    tested = 0
    for name, g in connected_corpus().items():
        if g.edge_count > 8:
            continue
        reg.build_window(g, window)
        dec = decorate(g, reg, window)
        ok, _ = check_decoration_injective(g, dec)
        if not ok:
            continue
        tested += 1
        r, m = g.vertex_count, max(max(w) for w in window)
        balls = [ball(g, dec, v, r, m) for v in range(g.vertex_count)]
        for b1, b2 in itertools.combinations(balls, 2):
            if rooted_iso(b1, b2):
                return CheckResult("tau_injective", FAIL, f"{name}: two roots are equivalent")
    return CheckResult("tau_injective", PASS, f"{tested} decorated graphs")


def verify_suite(budget: int = 10**6, rank_fn: RankFn | None = None, seed: int = 0) -> VerifyResult:
    """Run every oracle cross-check whose cost fits in ``budget``."""
    rank_fn = rank_fn or normalized_rank
    rng = random.Random(seed)
    plan = [
        ("rank_identity", 10**4, lambda: check_rank_identity(rank_fn, rng)),
        ("rank_lattice", 10**4, lambda: check_rank_lattice(rank_fn)),
        ("connected_k1_law", 10**2, check_k1_law),
        ("quotient_point_axioms", 10**4, lambda: check_point_axioms(rng)),
        ("exact_vs_brute", 10**4, check_exact_vs_brute),
        ("sampled_subset", 10**5, check_sampled_subset),
        ("net_property", 10**5, check_nets),
        ("metric_axioms", 10**4, lambda: check_metric_axioms(rng)),
        ("tau_injective", 10**5, check_tau_injective),
    ]
    results = []
    for name, cost, fn in plan:
        if cost > budget:
            results.append(CheckResult(name, SKIP, f"needs budget {cost}"))
            continue
        try:
            results.append(fn())
        except Exception as exc:  # a crash in a check is a failed check
            results.append(CheckResult(name, FAIL, f"{type(exc).__name__}: {exc}"))
    return VerifyResult(results)
