"""Exhaustive matching oracle, random matching baselines and the side imbalance"""
from collections.abc import Iterator
from fractions import Fraction
from itertools import product

import numpy as np

from kcolored.asymptotics import bound_from_alpha, coefficients, term_A
from kcolored.coloring.counting import count_monochromatic
from kcolored.doubling import random_matching, side_counts
from kcolored.domain.entities import EdgeColoring, Matching, PointSet
from kcolored.domain.errors import InvariantViolation, SizeGuardError

from .solver import MatchingSolution
from .weights import WeightTable, build_weights

MAX_BRUTE_FORCE_POINTS = 7


def iter_matchings(n: int, allow_two_cycles: bool = False) -> Iterator[tuple[int, ...]]:
    """All target arrays without fixed points, in lexicographic order"""
    choices = [[q for q in range(n) if q != p] for p in range(n)]
    for targets in product(*choices):
        if allow_two_cycles or all(targets[q] != p for p, q in enumerate(targets)):
            yield targets


def count_matchings(n: int, allow_two_cycles: bool = False) -> int:
    return sum(1 for _ in iter_matchings(n, allow_two_cycles))


def brute_force_matching(
    points: PointSet, chi: EdgeColoring, weights: WeightTable | None = None
) -> tuple[MatchingSolution, Fraction]:
    """Best matching by enumeration, returned with the resulting alpha"""
    n = len(points)
    if n > MAX_BRUTE_FORCE_POINTS:
        raise SizeGuardError(f"Brute-force matching is limited to {MAX_BRUTE_FORCE_POINTS} points, got {n}")
    weights = weights or build_weights(points, chi)

    best: tuple[Fraction, tuple[int, ...]] | None = None
    for targets in iter_matchings(n):
        total = weights.total(targets)
        if best is None or total < best[0]:
            best = (total, targets)
    if best is None:
        raise InvariantViolation(f"No matching without 2-cycles exists for n={n}")

    total, targets = best
    matching = Matching(targets)
    details = tuple(weights.details(p, q) for p, q in enumerate(targets))
    alpha = coefficients(points, chi, matching, details).alpha
    expected = count_monochromatic(points, chi) + term_A(n).c4 + total
    if alpha != expected:
        raise InvariantViolation(f"Local alphas sum to {expected} but the coefficients give {alpha}")
    return MatchingSolution(matching, details, total), alpha


def sample_matching_bounds(
    points: PointSet, chi: EdgeColoring, samples: int, rng: np.random.Generator, weights: WeightTable | None = None
) -> list[Fraction]:
    """Bounds from random valid matchings, each with its best details per vertex"""
    n = len(points)
    weights = weights or build_weights(points, chi)
    base = count_monochromatic(points, chi) + term_A(n).c4
    bounds = []
    for _ in range(samples):
        m = random_matching(n, rng)
        bounds.append(bound_from_alpha(base + weights.total(m.targets), n))
    return bounds


def side_imbalance(points: PointSet, chi: EdgeColoring, m: Matching) -> Fraction:
    """Mean |left - right| side count over all vertices and colors"""
    n = len(points)
    total = 0
    for p in range(n):
        counts = side_counts(points, chi, m, p)
        total += sum(abs(a - b) for a, b in zip(counts.left, counts.right))
    return Fraction(total, n * chi.k)
