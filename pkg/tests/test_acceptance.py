"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line; the lines are printed in the terminal
summary (see ``conftest.py``) and by ``python3 tests/test_acceptance.py``.
Tolerances are the stated ones; nothing is loosened to make a check pass.
"""

from __future__ import annotations

import itertools
import math
import random
import sys
import time
from fractions import Fraction

import pytest

from matroidlimit import oracles
from matroidlimit.corpus import connected_corpus, corpus
from matroidlimit.experiments import ExperimentConfig, run_convergence
from matroidlimit.generators import cycle, directed_cycle, path
from matroidlimit.graph import Graph, normalized_rank, normalized_rank_vertex_average
from matroidlimit.nets import Decoration, NetRegistry, build_net, check_decoration_injective, decorate, is_net, necessary_members
from matroidlimit.omega import ball, ball_distribution, distribution_distance, local_distance, rooted_iso
from matroidlimit.quotient import (
    EdgeColoring,
    QuotientPoint,
    QuotientSet,
    dk_distance,
    dq_truncated,
    hausdorff,
    quotient_point,
    quotient_set_exact,
    quotient_set_sampled,
    tail_bound,
)

RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def random_graph(rng: random.Random, max_v=12, max_d=4) -> Graph:
    n = rng.randint(1, max_v)
    d = rng.randint(1, max_d)
    deg = [0] * n
    edges = []
    for a, b in rng.sample([(a, b) for a in range(n) for b in range(a + 1, n)], n * (n - 1) // 2):
        if deg[a] < d and deg[b] < d and rng.random() < 0.5:
            edges.append((a, b))
            deg[a] += 1
            deg[b] += 1
    return Graph(n, tuple(edges), d)


def test_01_rank_identity():
    rng = random.Random(101)
    t0 = time.perf_counter()
    mismatches = 0
    for _ in range(200):
        g = random_graph(rng)
        for _ in range(50):
            f = [e for e in range(g.edge_count) if rng.random() < 0.5]
            mismatches += normalized_rank(g, f) != normalized_rank_vertex_average(g, f)
    dt = time.perf_counter() - t0
    record(1, mismatches == 0 and dt < 10, f"{mismatches} mismatches over 10000 pairs in {dt:.2f}s (limit 10s)")


def test_02_exact_quotient_oracle():
    t0 = time.perf_counter()
    cases, bad = 0, []
    for name, g in corpus().items():
        if g.edge_count > 8:
            continue
        for k in (1, 2):
            exact = quotient_set_exact(g, k)
            sampled = quotient_set_sampled(g, k, 10**4, seed=cases)
            if not sampled.point_set() <= exact.point_set():
                bad.append(f"{name}/k={k} sampled")
            if {p.coords for p in exact.points} != oracles.brute_quotient_set(g, k):
                bad.append(f"{name}/k={k} brute")
            cases += 1
    dt = time.perf_counter() - t0
    record(2, not bad and dt < 60, f"{cases} (graph, k) cases, problems={bad}, {dt:.2f}s (limit 60s)")


def test_03_connected_k1_law():
    bad = []
    graphs = connected_corpus()
    for name, g in graphs.items():
        want = (Fraction(0), Fraction(g.vertex_count - 1, g.vertex_count))
        if [p.coords for p in quotient_set_exact(g, 1).points] != [want]:
            bad.append(name)
    record(3, not bad, f"{len(graphs)} connected graphs, mismatches={bad}")


def test_04_point_lattice_axioms():
    rng = random.Random(404)
    graphs = list(corpus().values())
    cache: dict = {}
    violations = 0
    trials = 10**5
    for _ in range(trials):
        gi = rng.randrange(len(graphs))
        g = graphs[gi]
        k = rng.randint(1, 3)
        colors = tuple(rng.randint(1, k) for _ in range(g.edge_count))
        key = (gi, k, colors)
        if key not in cache:
            cache[key] = quotient_point(g, EdgeColoring(k, colors)).coords
        c = cache[key]
        a, b = rng.randrange(2**k), rng.randrange(2**k)
        if c[a | b] + c[a & b] > c[a] + c[b]:
            violations += 1
        if c[a & b] > c[a] or c[a] > c[a | b]:
            violations += 1
    record(4, violations == 0, f"{violations} violations in {trials} trials ({len(cache)} distinct points)")


def test_05_net_property():
    notes = []
    ok = True
    for name, g in (("C3", cycle(3)), ("C4", cycle(4)), ("P4", path(4))):
        for n in (1, 2):
            net = build_net(g, 2, n)
            good = is_net(g, 2, n, net.distinct())
            ok &= good
            notes.append(f"{name}/n={n}:{len(net.distinct())}")
    g = cycle(3)
    net = build_net(g, 2, 2)
    needed = necessary_members(g, 2, 2, net)
    detected = bool(needed) and not is_net(g, 2, 2, net.without(needed[0]))
    record(5, ok and detected, f"nets {' '.join(notes)} cover all colorings={ok}; mutation detected={detected}")


def test_06_metric_axioms():
    rng = random.Random(606)
    tol = 1e-12
    graphs = list(corpus().values())
    fails = 0
    for _ in range(10**4):
        k = rng.randint(1, 2)
        trio = []
        for _ in range(3):
            g = rng.choice(graphs)
            trio.append((g, EdgeColoring(k, tuple(rng.randint(1, k) for _ in range(g.edge_count)))))
        (g1, a1), (g2, a2), (g3, a3) = trio
        d12, d21 = dk_distance(g1, a1, g2, a2), dk_distance(g2, a2, g1, a1)
        d13, d23 = dk_distance(g1, a1, g3, a3), dk_distance(g2, a2, g3, a3)
        fails += abs(d12 - d21) > tol or dk_distance(g1, a1, g1, a1) != 0 or d13 > d12 + d23 + tol
        sets = []
        for _ in range(3):
            pts = {tuple(Fraction(rng.randint(0, 12), 12) for _ in range(2**k)) for _ in range(rng.randint(1, 5))}
            sets.append(QuotientSet(k, tuple(QuotientPoint(k, p) for p in sorted(pts)), exact=True))
        x, y, z = sets
        hxy, hyx = hausdorff(x, y), hausdorff(y, x)
        fails += abs(hxy - hyx) > tol or hausdorff(x, x) != 0 or hausdorff(x, z) > hxy + hausdorff(y, z) + tol
    record(6, fails == 0, f"{fails} failures over 10000 instances each for dk_distance and hausdorff")


def test_07_dq_truncation():
    worst_id, worst_tail = 0.0, 0.0
    lower_zero = True
    for K in (1, 2):
        for g in (cycle(3), path(4), corpus()["house"]):
            iv = dq_truncated(g, g, K, "exact")
            lower_zero &= iv.lower == 0
            worst_id = max(worst_id, abs(iv.upper - tail_bound(K)))
    for K in range(1, 11):
        worst_tail = max(worst_tail, abs(tail_bound(K) - oracles.series_tail(K, upto=60)))
    ok = lower_zero and worst_id <= 1e-12 and worst_tail <= 1e-12
    record(
        7, ok,
        f"identical inputs: lower==0 {lower_zero}, |upper-tail|<= {worst_id:.1e}; "
        f"|tail(K) - sum to k=60| = {worst_tail:.3e} (tolerance 1e-12)",
    )


def cycle_config() -> ExperimentConfig:
    return ExperimentConfig(
        family="cycle", sizes=[4, 8, 16, 32, 64], K=2, mode="auto",
        budget=10**7, samples=10**5, seed=1,
    )


@pytest.fixture(scope="module")
def cycle_run():
    t0 = time.perf_counter()
    report = run_convergence(cycle_config())
    return report, time.perf_counter() - t0


def test_08_cauchy_evidence(cycle_run):
    report, dt = cycle_run
    lows = report.dq_lower_bounds()
    monotone = all(b <= a for a, b in zip(lows, lows[1:]))
    ok = monotone and lows[-1] < 0.05 and dt < 600 and report.ok
    shown = ", ".join(f"{x:.4f}" for x in lows)
    record(8, ok, f"dq lower bounds [{shown}], non-increasing={monotone}, final<0.05={lows[-1] < 0.05}, {dt:.1f}s")


def test_09_tau_injective():
    window = [(2, 1), (2, 2)]
    reg = NetRegistry(seed=0)
    tested, equivalent = 0, []
    for name, g in corpus().items():
        reg.build_window(g, window)
        dec = decorate(g, reg, window)
        if not check_decoration_injective(g, dec)[0]:
            continue
        tested += 1
        balls = [ball(g, dec, v, g.vertex_count, 2) for v in range(g.vertex_count)]
        for b1, b2 in itertools.combinations(balls, 2):
            if rooted_iso(b1, b2):
                equivalent.append(name)
                break
    ok_c3, witness = check_decoration_injective(cycle(3), Decoration.constant(3))
    ok = tested > 0 and not equivalent and not ok_c3 and witness is not None
    record(9, ok, f"{tested} injectively decorated graphs, equivalent roots in {equivalent}; constant C3 witness {witness}")


def test_10_ball_statistics():
    laws = []
    single = True
    for n in (50, 100, 200):
        g = directed_cycle(n)
        law = ball_distribution(g, Decoration.constant(n), 2, 0)
        single &= list(law.histogram.values()) == [Fraction(1)]
        laws.append(law)
    zero = all(distribution_distance(a, b) == 0 for a, b in itertools.combinations(laws, 2))
    p3 = Graph(3, ((0, 1), (2, 1)), 2)
    const = Decoration.constant(2)
    law = ball_distribution(p3, const, 1, 0)
    end, centre = ball(p3, const, 0, 1, 0).code(), ball(p3, const, 1, 1, 0).code()
    p3_ok = law.histogram == {end: Fraction(2, 3), centre: Fraction(1, 3)}
    record(10, single and zero and p3_ok, f"cycles single class={single}, pairwise TV zero={zero}, P3 law exact={p3_ok}")


def test_11_local_distance_fixtures():
    def run(a, b):
        g, h = cycle(a), cycle(b)
        return local_distance((g, 0, Decoration.constant(a)), (h, 0, Decoration.constant(b)), 60, 10)

    small, big = run(3, 4), run(100, 200)
    ok = (
        small.upper == 1 + 2.0**-10 and big.upper == 2.0**-49 + 2.0**-10
        and not small.indistinguishable and not big.indistinguishable
    )
    record(11, ok, f"C3/C4 best {small.upper!r}, C100/C200 best {big.upper!r}, flags "
                   f"{small.indistinguishable}/{big.indistinguishable}")


def test_12_determinism(cycle_run):
    first, _ = cycle_run
    second = run_convergence(cycle_config())
    same = first.to_csv().encode() == second.to_csv().encode()
    record(12, same, f"CSV byte-identical on rerun: {same} ({len(first.to_csv())} bytes)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
