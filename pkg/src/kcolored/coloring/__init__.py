"""k-edge-colorings, monochromatic crossing counts and the coloring search"""
from .counting import (
    build_crossing_graph,
    count_crossings,
    count_monochromatic,
    monochromatic_adjacencies,
    random_coloring,
)
from .search import alternate_search, local_search_k_cut, max_k_cut_local_search, perturb_points
from .search_config import SearchConfig, SearchPresets

__all__ = [
    "build_crossing_graph",
    "count_crossings",
    "count_monochromatic",
    "monochromatic_adjacencies",
    "random_coloring",
    "alternate_search",
    "local_search_k_cut",
    "max_k_cut_local_search",
    "perturb_points",
    "SearchConfig",
    "SearchPresets",
]
