"""Domain entities for k-edge-colored straight-line drawings of K_n"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

import numpy as np

from .errors import (
    GeneralPositionError,
    InvalidColoringError,
    InvalidDetailsError,
    InvalidMatchingError,
    InvariantViolation,
)
from .types import FIRST_TARGET_TYPE, FIRST_TARGETS, SECOND_TARGET_TYPE, SECOND_TARGETS, SIDE_TYPE, SIDES

Coordinate = int | Fraction


@dataclass(frozen=True)
class Point:
    """Point of a drawing; integer coordinates, rational inside the doubling construction"""

    x: Coordinate
    y: Coordinate

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def is_integral(self) -> bool:
        return _is_integral(self.x) and _is_integral(self.y)

    def to_tuple(self) -> tuple[Coordinate, Coordinate]:
        return (self.x, self.y)


def _is_integral(value: Coordinate) -> bool:
    return isinstance(value, int) or value.denominator == 1


@dataclass(frozen=True, order=True)
class Segment:
    """Canonical unordered vertex pair (a < b)"""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"Segment endpoints must differ, got {self.a}")
        if self.a > self.b:
            raise ValueError(f"Segment must be canonical (a < b), got ({self.a}, {self.b})")

    @classmethod
    def of(cls, u: int, v: int) -> Segment:
        return cls(min(u, v), max(u, v))

    def shares_endpoint(self, other: Segment) -> bool:
        return bool({self.a, self.b} & {other.a, other.b})

    def other(self, vertex: int) -> int:
        if vertex == self.a:
            return self.b
        if vertex == self.b:
            return self.a
        raise ValueError(f"Vertex {vertex} is not an endpoint of {self}")


class PointSet:
    """Ordered set of distinct points; vertex i is points[i]

    General position is checked by kcolored.geometry.validate_general_position,
    which every public entry point calls on ingestion.
    """

    def __init__(self, points: Iterable[Point | tuple[Coordinate, Coordinate]]):
        self.points: tuple[Point, ...] = tuple(p if isinstance(p, Point) else Point(*p) for p in points)
        if len(set(self.points)) != len(self.points):
            seen: dict[Point, int] = {}
            for index, point in enumerate(self.points):
                if point in seen:
                    raise GeneralPositionError(
                        f"Duplicate point {point.to_tuple()} at vertices {seen[point]} and {index}",
                        triple=(seen[point], index),
                    )
                seen[point] = index

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, index: int) -> Point:
        return self.points[index]

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PointSet(n={len(self)})"

    def is_integral(self) -> bool:
        return all(p.is_integral() for p in self.points)

    def segments(self) -> list[Segment]:
        """All C(n,2) segments in lexicographic order"""
        n = len(self)
        return [Segment(a, b) for a in range(n) for b in range(a + 1, n)]

    def scaled_to_integers(self) -> PointSet:
        """Clear denominators; positive scaling keeps every orientation sign"""
        scale = 1
        for p in self.points:
            for value in (p.x, p.y):
                if isinstance(value, Fraction):
                    scale = lcm(scale, value.denominator)
        return PointSet(Point(int(p.x * scale), int(p.y * scale)) for p in self.points)

    def coordinates(self) -> list[tuple[Coordinate, Coordinate]]:
        return [p.to_tuple() for p in self.points]


def pair_index(n: int, a: int, b: int) -> int:
    """Position of pair (a, b), a < b, in lexicographic order over C(n,2) pairs"""
    return a * (2 * n - a - 1) // 2 + (b - a - 1)


class EdgeColoring:
    """Total map from the C(n,2) segments of K_n to colors 1..k"""

    def __init__(self, n: int, k: int, colors: Sequence[int]):
        if k < 1:
            raise InvalidColoringError(f"Number of colors must be >= 1, got {k}")
        expected = comb(n, 2)
        if len(colors) != expected:
            raise InvalidColoringError(f"Coloring of K_{n} needs {expected} entries, got {len(colors)}")
        for index, color in enumerate(colors):
            if not 1 <= color <= k:
                raise InvalidColoringError(f"Color {color} at pair index {index} outside 1..{k}")
        self.n = n
        self.k = k
        self.colors: tuple[int, ...] = tuple(int(c) for c in colors)

    @classmethod
    def uniform(cls, n: int, k: int, color: int = 1) -> EdgeColoring:
        return cls(n, k, [color] * comb(n, 2))

    @classmethod
    def from_mapping(cls, n: int, k: int, mapping: dict[Segment, int]) -> EdgeColoring:
        colors = []
        for a in range(n):
            for b in range(a + 1, n):
                segment = Segment(a, b)
                if segment not in mapping:
                    raise InvalidColoringError(f"Coloring is not total: segment ({a}, {b}) missing")
                colors.append(mapping[segment])
        return cls(n, k, colors)

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError(f"No edge at a single vertex {u}")
        a, b = (u, v) if u < v else (v, u)
        return self.colors[pair_index(self.n, a, b)]

    def __getitem__(self, segment: Segment) -> int:
        return self.colors[pair_index(self.n, segment.a, segment.b)]

    def as_mapping(self) -> dict[Segment, int]:
        return {Segment(a, b): self.color(a, b) for a in range(self.n) for b in range(a + 1, self.n)}

    def as_matrix(self) -> np.ndarray:
        """Symmetric n x n color matrix with zeros on the diagonal"""
        matrix = np.zeros((self.n, self.n), dtype=np.int16)
        rows, cols = np.triu_indices(self.n, k=1)
        matrix[rows, cols] = self.colors
        matrix[cols, rows] = self.colors
        return matrix

    def relabeled(self, permutation: dict[int, int]) -> EdgeColoring:
        return EdgeColoring(self.n, self.k, [permutation[c] for c in self.colors])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EdgeColoring)
            and (self.n, self.k, self.colors) == (other.n, other.k, other.colors)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.colors))

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.n}, k={self.k})"


class Matching:
    """Vertex map p -> target(p) without fixed points and without 2-cycles"""

    def __init__(self, targets: Sequence[int]):
        n = len(targets)
        for p, q in enumerate(targets):
            if not 0 <= q < n:
                raise InvalidMatchingError(f"Target {q} of vertex {p} outside 0..{n - 1}", vertex=p)
            if q == p:
                raise InvalidMatchingError(f"Vertex {p} is matched to itself", vertex=p)
        for p, q in enumerate(targets):
            if targets[q] == p:
                raise InvalidMatchingError(f"Vertices {p} and {q} form a 2-cycle", vertex=p)
        self.targets: tuple[int, ...] = tuple(int(q) for q in targets)

    def __getitem__(self, p: int) -> int:
        return self.targets[p]

    def __len__(self) -> int:
        return len(self.targets)

    def __iter__(self) -> Iterator[int]:
        return iter(self.targets)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matching) and self.targets == other.targets

    def __hash__(self) -> int:
        return hash(self.targets)

    def __repr__(self) -> str:
        return f"Matching({list(self.targets)})"

    def matched_color(self, chi: EdgeColoring, p: int) -> int:
        """Color of the matching edge at p"""
        return chi.color(p, self.targets[p])


@dataclass(frozen=True)
class Details:
    """Choices at one vertex for one doubling step

    c_prime colors the sibling edge; m1 is the target of the first (far) child:
    left/right child of the vertex's target, or the sibling; m2 is the target of
    the second (near) child, which may not be the sibling.
    """

    c_prime: int
    m1: FIRST_TARGET_TYPE
    m2: SECOND_TARGET_TYPE

    def __post_init__(self):
        if self.c_prime < 1:
            raise InvalidDetailsError(f"Sibling color must be >= 1, got {self.c_prime}")
        if self.m1 not in FIRST_TARGETS:
            raise InvalidDetailsError(f"First child target must be one of {FIRST_TARGETS}, got {self.m1!r}")
        if self.m2 not in SECOND_TARGETS:
            raise InvalidDetailsError(f"Second child target must be one of {SECOND_TARGETS}, got {self.m2!r}")

    def to_tuple(self) -> tuple[int, str, str]:
        return (self.c_prime, self.m1, self.m2)


@dataclass(frozen=True)
class OffsetPair:
    """Offsets of the side-count recurrence S -> 2S + o at the two children"""

    o1: int
    o2: int

    def __post_init__(self):
        if self.o1 not in (0, 1, 2) or self.o2 not in (0, 1):
            raise InvariantViolation(f"Offset pair ({self.o1}, {self.o2}) outside o1 in 0..2, o2 in 0..1")
        if self.o1 == 2 and self.o2 == 0:
            raise InvariantViolation("Offset pair (2, 0) cannot occur")

    def as_tuple(self) -> tuple[int, int]:
        return (self.o1, self.o2)


VALID_OFFSET_PAIRS: tuple[OffsetPair, ...] = (
    OffsetPair(0, 0),
    OffsetPair(0, 1),
    OffsetPair(1, 0),
    OffsetPair(1, 1),
    OffsetPair(2, 1),
)


class SideCounts:
    """Per-color counts of non-matching edges at p left/right of its matching edge"""

    def __init__(self, left: Sequence[int], right: Sequence[int]):
        if len(left) != len(right):
            raise ValueError(f"Left and right tables differ in length: {len(left)} != {len(right)}")
        self.left: tuple[int, ...] = tuple(int(v) for v in left)
        self.right: tuple[int, ...] = tuple(int(v) for v in right)

    @property
    def k(self) -> int:
        return len(self.left)

    def get(self, color: int, side: SIDE_TYPE) -> int:
        table = self.left if side == "left" else self.right
        return table[color - 1]

    def __getitem__(self, key: tuple[int, SIDE_TYPE]) -> int:
        return self.get(*key)

    def total(self) -> int:
        return sum(self.left) + sum(self.right)

    def items(self) -> Iterator[tuple[int, SIDE_TYPE, int]]:
        for color in range(1, self.k + 1):
            for side in SIDES:
                yield color, side, self.get(color, side)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SideCounts) and (self.left, self.right) == (other.left, other.right)

    def __repr__(self) -> str:
        return f"SideCounts(left={list(self.left)}, right={list(self.right)})"
