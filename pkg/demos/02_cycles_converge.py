"""
Quotient distances along a growing family of cycles
===================================================

Consecutive cycles get closer in the truncated quotient distance as long
as each Q_k is computed exactly.  Once sampling takes over, uniform
colorings concentrate near balanced color classes and the extreme points
of Q_2 are never seen, so the sampled lower bounds stop shrinking.
"""

from matroidlimit.experiments import ExperimentConfig, run_convergence
from matroidlimit.generators import cycle
from matroidlimit.quotient import dq_truncated, quotient_set_exact, quotient_set_sampled, tail_bound

# exact for small cycles
for a, b in [(4, 8), (8, 12), (12, 16)]:
    iv = dq_truncated(cycle(a), cycle(b), K=2, mode="exact")
    print(a, b, round(iv.lower, 4), "tail", round(tail_bound(2), 4))

# how much of Q_2(C_16) does a uniform sample of 10^4 colorings reach?
exact = quotient_set_exact(cycle(16), 2)
sampled = quotient_set_sampled(cycle(16), 2, 10**4, seed=0)
print(len(sampled.points), "of", len(exact.points), "points")
col1 = sampled.as_array()[:, 1]
print("sampled rho(color 1) range:", col1.min(), col1.max())

# the full experiment switches to sampling where 2^|E| exceeds the budget
cfg = ExperimentConfig(family="cycle", sizes=[4, 8, 16, 32, 64], K=2, mode="auto", seed=1)
report = run_convergence(cfg)
for p in report.pairs:
    print(p.size_a, p.size_b, round(p.dq.lower, 4), "estimate" if p.dq.estimate else "exact")
print(report.to_csv().splitlines()[0])
