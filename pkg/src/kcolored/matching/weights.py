"""Weight table: the cheapest local alpha at p for every possible target q"""
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from kcolored.asymptotics import local_alpha
from kcolored.doubling import enumerate_details, side_count_matrix
from kcolored.domain.entities import Details, EdgeColoring, PointSet, SideCounts
from kcolored.geometry import validate_general_position
from kcolored.infrastructure.logging import get_logger

logger = get_logger("kcolored.matching")


@dataclass(frozen=True)
class WeightTable:
    """w(p, q) and its argmin details, keyed by ordered pairs p != q"""

    n: int
    k: int
    weights: dict[tuple[int, int], Fraction]
    best_details: dict[tuple[int, int], Details]

    def weight(self, p: int, q: int) -> Fraction:
        return self.weights[(p, q)]

    def details(self, p: int, q: int) -> Details:
        return self.best_details[(p, q)]

    def total(self, targets: Sequence[int]) -> Fraction:
        return sum((self.weights[(p, q)] for p, q in enumerate(targets)), Fraction(0))


def best_local_details(counts: SideCounts, cbar: int, k: int) -> tuple[Fraction, Details]:
    """Minimum local alpha over admissible details; ties keep the first in enumeration order"""
    best: tuple[Fraction, Details] | None = None
    for details in enumerate_details(k, cbar):
        value = local_alpha(counts, cbar, details)
        if best is None or value < best[0]:
            best = (value, details)
    assert best is not None
    return best


def build_weights(points: PointSet, chi: EdgeColoring, table: np.ndarray | None = None) -> WeightTable:
    """Weight of every ordered pair, fixing p's target to q and choosing p's details optimally"""
    n = len(points)
    if table is None:
        table = validate_general_position(points)
    color_matrix = chi.as_matrix()
    weights: dict[tuple[int, int], Fraction] = {}
    best_details: dict[tuple[int, int], Details] = {}
    for p in range(n):
        left, right = side_count_matrix(table, color_matrix, chi.k, p)
        for q in range(n):
            if q == p:
                continue
            cbar = int(color_matrix[p, q])
            weight, details = best_local_details(SideCounts(left[q], right[q]), cbar, chi.k)
            weights[(p, q)] = weight
            best_details[(p, q)] = details
    logger.debug(f"Weight table built: {len(weights)} entries for n={n}, k={chi.k}")
    return WeightTable(n=n, k=chi.k, weights=weights, best_details=best_details)
