"""Desk-scale quotient-convergence experiments over growing graph families."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .generators import FAMILIES, generate
from .graph import Graph
from .nets import Decoration
from .omega import ball_distribution, distribution_distance
from .quotient import (
    DistanceInterval,
    QuotientSet,
    derive_seed,
    dq_from_sets,
    point_axiom_violations,
    quotient_set,
)

MODES = ("exact", "sampled", "auto")
SAMPLE_STREAM = 2
CSV_FIELDS = ("pair", "size_a", "size_b", "metric", "value", "exact")


@dataclass
class ExperimentConfig:
    family: str
    sizes: list[int]
    K: int = 2
    k_max: int = 3
    mode: str = "auto"
    budget: int = 10**7
    samples: int = 10**5
    seed: int = 1
    degree: int | None = None
    ball_levels: list[tuple[int, int]] = field(default_factory=lambda: [(1, 0), (2, 0)])
    output: str | None = None

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not self.sizes or any(s < 1 for s in self.sizes):
            raise ValueError("sizes must be positive")
        if any(b < a for a, b in zip(self.sizes, self.sizes[1:])):
            raise ValueError("size schedule must be non-decreasing")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if not 1 <= self.K <= self.k_max:
            raise ValueError(f"K={self.K} must lie in [1, k_max={self.k_max}]")
        if self.samples < 1:
            raise ValueError("samples must be positive")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        doc = json.loads(text)
        if "ball_levels" in doc:
            doc["ball_levels"] = [tuple(x) for x in doc["ball_levels"]]
        return cls(**doc)


@dataclass
class PairResult:
    size_a: int
    size_b: int
    dq: DistanceInterval
    tv: dict[tuple[int, int], Fraction]
    seconds: float


@dataclass
class ConvergenceReport:
    config: ExperimentConfig
    pairs: list[PairResult]
    invariant_failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.invariant_failures

    def dq_lower_bounds(self) -> list[float]:
        return [p.dq.lower for p in self.pairs]

    def rows(self):
        for i, p in enumerate(self.pairs):
            exact = all(p.dq.exact_levels)
            yield (i, p.size_a, p.size_b, "dq_lower", p.dq.lower, exact)
            yield (i, p.size_a, p.size_b, "dq_upper", p.dq.upper, exact)
            for k, (t, ex) in enumerate(zip(p.dq.terms, p.dq.exact_levels), start=1):
                yield (i, p.size_a, p.size_b, f"hausdorff_k{k}", t, ex)
            for (r, m), tv in sorted(p.tv.items()):
                yield (i, p.size_a, p.size_b, f"tv_r{r}_m{m}", float(tv), True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for row in self.rows():
            w.writerow([repr(x) if isinstance(x, float) else x for x in row])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "config": asdict(self.config),
            "ok": self.ok,
            "invariant_failures": self.invariant_failures,
            "pairs": [
                {
                    "pair": i,
                    "size_a": p.size_a,
                    "size_b": p.size_b,
                    "dq": json.loads(p.dq.to_json()),
                    "tv": {f"r{r}_m{m}": float(v) for (r, m), v in sorted(p.tv.items())},
                    "tv_exact": {f"r{r}_m{m}": f"{v.numerator}/{v.denominator}" for (r, m), v in sorted(p.tv.items())},
                    "wall_clock_seconds": p.seconds,
                }
                for i, p in enumerate(self.pairs)
            ],
        }
        return json.dumps(doc, sort_keys=True, indent=1) + "\n"

    def write(self, prefix: str) -> tuple[str, str]:
        csv_path, json_path = prefix + ".csv", prefix + ".json"
        with open(csv_path, "w") as fh:
            fh.write(self.to_csv())
        with open(json_path, "w") as fh:
            fh.write(self.to_json())
        return csv_path, json_path


def _check_sets(name: str, sets: list[QuotientSet], failures: list[str]) -> None:
    for qs in sets:
        for p in qs.points:
            bad = point_axiom_violations(p)
            if bad:
                failures.append(f"{name} Q_{qs.k}: {bad[0]}")
                return


def run_convergence(config: ExperimentConfig) -> ConvergenceReport:
    """Truncated d_Q and ball-law TV between consecutive graphs of the schedule.

    Quotient sets and ball laws are computed once per graph.  With mode
    ``auto`` each level is enumerated when ``k**|E|`` fits the budget and
    sampled otherwise.  Output depends only on the config.
    """
    config.validate()
    sample_seed = derive_seed(config.seed, SAMPLE_STREAM)
    failures: list[str] = []
    graphs: dict[int, Graph] = {}
    qsets: dict[int, list[QuotientSet]] = {}
    laws: dict[int, dict] = {}
    cost: dict[int, float] = {}
    for size in dict.fromkeys(config.sizes):
        t0 = time.perf_counter()
        g = generate(config.family, size, config.degree, config.seed)
        graphs[size] = g
        qsets[size] = [
            quotient_set(g, k, config.mode, config.budget, config.samples, sample_seed)
            for k in range(1, config.K + 1)
        ]
        _check_sets(f"{config.family}({size})", qsets[size], failures)
        const = Decoration.constant(g.edge_count)
        laws[size] = {}
        for r, m in config.ball_levels:
            law = ball_distribution(g, const, r, m)
            if sum(law.histogram.values()) != 1:
                failures.append(f"ball law of size {size} at r={r} does not sum to 1")
            laws[size][(r, m)] = law
        cost[size] = time.perf_counter() - t0

    pairs = []
    for a, b in zip(config.sizes, config.sizes[1:]):
        t0 = time.perf_counter()
        sampled = config.mode != "exact"
        dq = dq_from_sets(
            qsets[a], qsets[b], mode=config.mode,
            seed=config.seed if sampled else None,
            samples=config.samples if sampled else None,
        )
        tv = {lv: distribution_distance(laws[a][lv], laws[b][lv]) for lv in config.ball_levels}
        if not 0 <= dq.lower <= dq.upper:
            failures.append(f"malformed interval for pair ({a}, {b})")
        pairs.append(PairResult(a, b, dq, tv, time.perf_counter() - t0 + cost[a] + cost[b]))
    report = ConvergenceReport(config, pairs, failures)
    if config.output:
        report.write(config.output)
    return report
