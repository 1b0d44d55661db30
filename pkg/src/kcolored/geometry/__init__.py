"""Exact geometric predicates over integer and rational coordinates"""
from .predicates import (
    convex_point_set,
    convex_quadruple_count,
    crossing_rows,
    enumerate_crossings,
    in_convex_position,
    iter_crossing_index_pairs,
    orientation,
    orientation_slice,
    orientation_table,
    random_point_set,
    segment_arrays,
    segments_cross,
    side_of_directed_line,
    validate_general_position,
)

__all__ = [
    "convex_point_set",
    "convex_quadruple_count",
    "crossing_rows",
    "enumerate_crossings",
    "in_convex_position",
    "iter_crossing_index_pairs",
    "orientation",
    "orientation_slice",
    "orientation_table",
    "random_point_set",
    "segment_arrays",
    "segments_cross",
    "side_of_directed_line",
    "validate_general_position",
]
