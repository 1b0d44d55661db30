"""Optimal matchings and details through a weighted bipartite graph"""
from .brute_force import (
    MAX_BRUTE_FORCE_POINTS,
    brute_force_matching,
    count_matchings,
    iter_matchings,
    sample_matching_bounds,
    side_imbalance,
)
from .solver import BipartiteInstance, MatchingSolution, optimal_matching, solve_instance
from .weights import WeightTable, best_local_details, build_weights

__all__ = [
    "MAX_BRUTE_FORCE_POINTS",
    "BipartiteInstance",
    "MatchingSolution",
    "WeightTable",
    "best_local_details",
    "brute_force_matching",
    "build_weights",
    "count_matchings",
    "iter_matchings",
    "optimal_matching",
    "sample_matching_bounds",
    "side_imbalance",
    "solve_instance",
]
