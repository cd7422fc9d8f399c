"""Cycle-matroid quotients, quotient distances and decorated local statistics
for finite bounded-degree graphs."""

from .graph import Graph, GraphError, matroid_rank, normalized_rank, normalized_rank_vertex_average
from .quotient import (
    BudgetExceeded,
    DistanceInterval,
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
from .nets import Decoration, NetList, NetRegistry, build_net, check_decoration_injective, decorate
from .omega import ball, ball_distribution, distribution_distance, local_distance, rooted_iso
from .experiments import ExperimentConfig, run_convergence

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "matroid_rank", "normalized_rank", "normalized_rank_vertex_average",
    "BudgetExceeded", "DistanceInterval", "EdgeColoring", "QuotientPoint", "QuotientSet",
    "dk_distance", "dq_truncated", "hausdorff", "quotient_point", "quotient_set_exact",
    "quotient_set_sampled", "tail_bound",
    "Decoration", "NetList", "NetRegistry", "build_net", "check_decoration_injective", "decorate",
    "ball", "ball_distribution", "distribution_distance", "local_distance", "rooted_iso",
    "ExperimentConfig", "run_convergence",
]
