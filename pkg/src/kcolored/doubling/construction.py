"""Side counts, details and the explicit doubling construction"""
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from kcolored.domain.entities import Details, EdgeColoring, Matching, Point, PointSet, SideCounts
from kcolored.domain.errors import (
    ConstructionError,
    GeneralPositionError,
    InvalidDetailsError,
    SizeGuardError,
)
from kcolored.domain.types import CHILD_SLOT_TYPE, FIRST_TARGETS, SECOND_TARGETS
from kcolored.geometry import orientation, orientation_table, side_of_directed_line, validate_general_position
from kcolored.geometry.predicates import first_collinear_triple
from kcolored.infrastructure.logging import get_logger

from .config import MAX_EXPLICIT_STEPS, DoublingConfig

logger = get_logger("kcolored.doubling")


def side_counts(points: PointSet, chi: EdgeColoring, m: Matching, p: int) -> SideCounts:
    """Edges at p per color, left/right of the line directed from p toward its target"""
    q = m[p]
    left = [0] * chi.k
    right = [0] * chi.k
    for r in range(len(points)):
        if r in (p, q):
            continue
        color = chi.color(p, r)
        if side_of_directed_line(points[p], points[q], points[r]) == "left":
            left[color - 1] += 1
        else:
            right[color - 1] += 1
    return SideCounts(left, right)


def side_count_matrix(table: np.ndarray, color_matrix: np.ndarray, k: int, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Side counts at p for every candidate target q at once

    Returns (left, right), each of shape (n, k): row q holds the per-color
    counts when p is matched to q. Row p is meaningless and all zero.
    """
    onehot = (color_matrix[p][:, None] == np.arange(1, k + 1)[None, :]).astype(np.int64)
    oriented = table[p]
    left = (oriented > 0).astype(np.int64) @ onehot
    right = (oriented < 0).astype(np.int64) @ onehot
    return left, right


def enumerate_details(k: int, cbar: int) -> Iterator[Details]:
    """Admissible detail choices at a vertex whose matching edge has color cbar

    The first child may take the sibling as target only when the sibling edge
    keeps the matched color; otherwise the matched color would change below
    that child and the side-count recurrence would no longer be uniform.
    """
    for c_prime in range(1, k + 1):
        for m1 in FIRST_TARGETS:
            if m1 == "S" and c_prime != cbar:
                continue
            for m2 in SECOND_TARGETS:
                yield Details(c_prime, m1, m2)


def validate_details(chi: EdgeColoring, m: Matching, details: Sequence[Details]):
    """Raise InvalidDetailsError unless every vertex carries an admissible choice"""
    if len(details) != len(m):
        raise InvalidDetailsError(f"Expected details for {len(m)} vertices, got {len(details)}")
    for p, detail in enumerate(details):
        if detail.c_prime > chi.k:
            raise InvalidDetailsError(f"Sibling color {detail.c_prime} at vertex {p} outside 1..{chi.k}", vertex=p)
        cbar = m.matched_color(chi, p)
        if detail.m1 == "S" and detail.c_prime != cbar:
            raise InvalidDetailsError(
                f"Vertex {p}: first child matched to its sibling requires sibling color {cbar}, "
                f"got {detail.c_prime}",
                vertex=p,
            )


def random_matching(n: int, rng: np.random.Generator, max_tries: int = 1000) -> Matching:
    """Uniform map without fixed points and 2-cycles, by rejection"""
    if n < 3:
        raise ValueError(f"A matching without 2-cycles needs n >= 3, got {n}")
    for _ in range(max_tries):
        targets = [int(q) if q < p else int(q) + 1 for p, q in enumerate(rng.integers(0, n - 1, size=n))]
        if all(targets[targets[p]] != p for p in range(n)):
            return Matching(targets)
    order = [int(v) for v in rng.permutation(n)]
    targets = [0] * n
    for position, p in enumerate(order):
        targets[p] = order[(position + 1) % n]
    return Matching(targets)


def random_details(chi: EdgeColoring, m: Matching, rng: np.random.Generator) -> list[Details]:
    """Uniformly chosen admissible details at every vertex"""
    chosen = []
    for p in range(len(m)):
        options = list(enumerate_details(chi.k, m.matched_color(chi, p)))
        chosen.append(options[int(rng.integers(0, len(options)))])
    return chosen


@dataclass(frozen=True)
class DoubledDrawing:
    """Result of doubling steps; vertex v at level `level` descends from root v >> level

    parent[v] = (parent index, slot): slot 1 is the child farther from the
    parent's target, slot 2 the nearer one; children of u are 2u and 2u + 1.
    """

    points: PointSet
    coloring: EdgeColoring
    matching: Matching
    parent: tuple[tuple[int, CHILD_SLOT_TYPE], ...]
    epsilon: Fraction
    level: int = 1

    def root(self, v: int) -> int:
        return v >> self.level

    def children(self, u: int) -> tuple[int, int]:
        return 2 * u, 2 * u + 1


def target_children(points: PointSet, m: Matching, p: int) -> tuple[int, int]:
    """(left, right) child indices of p's target, seen along the line p -> target

    The target q is split along q -> h(q); its second child q + eps (h(q) - q)
    lies on the side of h(q), independently of eps.
    """
    q = m[p]
    if orientation(points[p], points[q], points[m[q]]) > 0:
        return 2 * q + 1, 2 * q
    return 2 * q, 2 * q + 1


def _initial_epsilon(points: PointSet, m: Matching) -> Fraction:
    """Conservative start: no child moves farther than a quarter of any point-line gap"""
    epsilon = Fraction(1, 4)
    n = len(points)
    for p in range(n):
        direction = points[m[p]] - points[p]
        span = max(abs(direction.x), abs(direction.y))
        for a, b in combinations((v for v in range(n) if v != p), 2):
            pa, pb, pp = points[a], points[b], points[p]
            det = abs((pb.x - pa.x) * (pp.y - pa.y) - (pb.y - pa.y) * (pp.x - pa.x))
            length = max(abs(pb.x - pa.x), abs(pb.y - pa.y))
            epsilon = min(epsilon, Fraction(det) / (8 * length * span))
    return epsilon


def _place_children(points: PointSet, m: Matching, epsilon: Fraction) -> PointSet:
    placed: list[Point] = []
    for p, point in enumerate(points):
        target = points[m[p]]
        dx = Fraction(target.x - point.x) * epsilon
        dy = Fraction(target.y - point.y) * epsilon
        placed.append(Point(point.x - dx, point.y - dy))
        placed.append(Point(point.x + dx, point.y + dy))
    return PointSet(placed)


def _stable_placement(
    points: PointSet, m: Matching, config: DoublingConfig
) -> tuple[PointSet, Fraction]:
    """Halve epsilon until the doubled order type stops changing"""
    epsilon = _initial_epsilon(points, m)
    previous: np.ndarray | None = None
    stable = 0
    for halving in range(config.max_halvings):
        try:
            candidate = _place_children(points, m, epsilon)
            table = orientation_table(candidate)
        except GeneralPositionError:
            table = None
        if table is not None and first_collinear_triple(table) is None:
            if previous is not None and np.array_equal(table, previous):
                stable += 1
            else:
                stable = 0
            previous = table
            if stable >= config.stable_rounds:
                logger.debug(f"Epsilon stabilised at {epsilon} after {halving} halvings")
                return candidate, epsilon
        else:
            previous = None
            stable = 0
        epsilon /= 2
    raise ConstructionError(
        f"Order type of the doubled drawing did not stabilise within {config.max_halvings} halvings"
    )


def double_once(
    points: PointSet,
    chi: EdgeColoring,
    m: Matching,
    details: Sequence[Details],
    config: DoublingConfig | None = None,
) -> DoubledDrawing:
    """Replace every point by two points on its matching edge and assemble coloring and matching"""
    config = config or DoublingConfig()
    n = len(points)
    if n < 3:
        raise ValueError(f"Doubling needs at least 3 points, got {n}")
    validate_general_position(points)
    validate_details(chi, m, details)

    doubled_points, epsilon = _stable_placement(points, m, config)

    targets = [0] * (2 * n)
    for p, detail in enumerate(details):
        left_child, right_child = target_children(points, m, p)
        by_symbol = {"L": left_child, "R": right_child, "S": 2 * p + 1}
        targets[2 * p] = by_symbol[detail.m1]
        targets[2 * p + 1] = by_symbol[detail.m2]

    colors = []
    for a in range(2 * n):
        for b in range(a + 1, 2 * n):
            u, v = a >> 1, b >> 1
            colors.append(details[u].c_prime if u == v else chi.color(u, v))

    parent: tuple[tuple[int, CHILD_SLOT_TYPE], ...] = tuple((v >> 1, 1 if v % 2 == 0 else 2) for v in range(2 * n))
    return DoubledDrawing(
        points=doubled_points,
        coloring=EdgeColoring(2 * n, chi.k, colors),
        matching=Matching(targets),
        parent=parent,
        epsilon=epsilon,
        level=1,
    )


def double_iterate(
    points: PointSet,
    chi: EdgeColoring,
    m: Matching,
    details: Sequence[Details],
    t: int,
    config: DoublingConfig | None = None,
) -> DoubledDrawing:
    """Apply t doubling steps, every descendant reusing the details of its root vertex"""
    if t < 1:
        raise ValueError(f"Number of doubling steps must be >= 1, got {t}")
    if t > MAX_EXPLICIT_STEPS:
        raise SizeGuardError(f"Explicit doubling is limited to {MAX_EXPLICIT_STEPS} steps, got {t}")

    drawing = double_once(points, chi, m, details, config)
    for level in range(1, t):
        # intermediate drawings continue on integer coordinates
        level_points = drawing.points.scaled_to_integers()
        level_details = [details[v >> level] for v in range(len(level_points))]
        drawing = double_once(level_points, drawing.coloring, drawing.matching, level_details, config)
        logger.debug(f"Doubling step {level + 1}/{t}: {len(drawing.points)} points, epsilon={drawing.epsilon}")

    return DoubledDrawing(
        points=drawing.points,
        coloring=drawing.coloring,
        matching=drawing.matching,
        parent=drawing.parent,
        epsilon=drawing.epsilon,
        level=t,
    )
