"""Matchings, details, side counts and the explicit doubling construction"""
from .classification import crossing_type_counts, predicted_type_counts
from .config import MAX_EXPLICIT_STEPS, DoublingConfig
from .construction import (
    DoubledDrawing,
    double_iterate,
    double_once,
    enumerate_details,
    random_details,
    random_matching,
    side_count_matrix,
    side_counts,
    target_children,
    validate_details,
)
from .offsets import extract_offsets, local_offsets

__all__ = [
    "crossing_type_counts",
    "predicted_type_counts",
    "MAX_EXPLICIT_STEPS",
    "DoublingConfig",
    "DoubledDrawing",
    "double_iterate",
    "double_once",
    "enumerate_details",
    "random_details",
    "random_matching",
    "side_count_matrix",
    "side_counts",
    "target_children",
    "validate_details",
    "extract_offsets",
    "local_offsets",
]
