"""Tests for exact predicates and crossing enumeration"""
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from kcolored.domain.entities import Point, PointSet, Segment
from kcolored.domain.errors import GeneralPositionError, SharedEndpointError
from kcolored.geometry import (
    convex_point_set,
    convex_quadruple_count,
    enumerate_crossings,
    in_convex_position,
    orientation,
    orientation_table,
    random_point_set,
    segments_cross,
    side_of_directed_line,
    validate_general_position,
)


def test_orientation_signs():
    """Test counterclockwise, clockwise and collinear triples"""
    assert orientation(Point(0, 0), Point(1, 0), Point(0, 1)) == 1
    assert orientation(Point(0, 0), Point(0, 1), Point(1, 0)) == -1
    assert orientation(Point(0, 0), Point(1, 1), Point(2, 2)) == 0


def test_orientation_with_rationals():
    """Test orientation on rational coordinates near a line"""
    p, q = Point(0, 0), Point(3, 3)
    assert orientation(p, q, Point(Fraction(1, 3), Fraction(1, 3) + Fraction(1, 10**12))) == 1
    assert orientation(p, q, Point(Fraction(1, 3), Fraction(1, 3))) == 0


def test_side_of_directed_line():
    """Test left/right relative to a directed line"""
    p, q = Point(0, 0), Point(4, 0)
    assert side_of_directed_line(p, q, Point(1, 2)) == "left"
    assert side_of_directed_line(p, q, Point(1, -2)) == "right"
    with pytest.raises(GeneralPositionError):
        side_of_directed_line(p, q, Point(2, 0))


def test_segments_cross_square(square):
    """Test that only the diagonals of a convex quadrilateral cross"""
    assert segments_cross(Segment(0, 2), Segment(1, 3), square)
    assert not segments_cross(Segment(0, 1), Segment(2, 3), square)
    assert not segments_cross(Segment(0, 3), Segment(1, 2), square)


def test_segments_cross_rejects_shared_endpoint(square):
    """Test that segments with a common endpoint are not a valid crossing query"""
    with pytest.raises(SharedEndpointError):
        segments_cross(Segment(0, 1), Segment(1, 2), square)


def test_orientation_table_matches_scalar(make_instance):
    """Test the vectorised table against the scalar predicate"""
    points, _, _, _ = make_instance(7, 1, seed=3)
    table = orientation_table(points)
    for i in range(7):
        for j in range(7):
            for l in range(7):
                assert table[i, j, l] == orientation(points[i], points[j], points[l])


def test_orientation_table_large_coordinates():
    """Test exact orientation when products overflow int64"""
    big = 1 << 40
    points = PointSet([(0, 0), (big, 1), (2 * big, 3), (big, big)])
    table = orientation_table(points)
    assert table[0, 1, 2] == orientation(points[0], points[1], points[2]) == 1


def test_validate_general_position_reports_triple():
    """Test that the first collinear triple is reported"""
    points = PointSet([(0, 0), (5, 1), (1, 1), (2, 2)])
    with pytest.raises(GeneralPositionError) as exc_info:
        validate_general_position(points)
    assert exc_info.value.triple == (0, 2, 3)


def test_duplicate_points_rejected():
    """Test that duplicate points violate general position"""
    with pytest.raises(GeneralPositionError):
        PointSet([(0, 0), (1, 2), (0, 0)])


def test_square_has_one_crossing(square):
    """Test crossing enumeration on a convex quadrilateral"""
    assert enumerate_crossings(square) == [(Segment(0, 2), Segment(1, 3))]


def test_convex_position_gives_all_quadruples():
    """Test that points in convex position realise C(n,4) crossings"""
    points = convex_point_set(8)
    assert len(enumerate_crossings(points)) == comb(8, 4)


def test_triangle_with_inner_point_has_no_crossing():
    """Test a non-convex quadruple"""
    points = PointSet([(0, 0), (10, 0), (5, 10), (5, 3)])
    assert not in_convex_position(*points)
    assert enumerate_crossings(points) == []


@pytest.mark.parametrize("seed", [0, 1, 2, 3, 4])
def test_crossings_equal_convex_quadruples(seed):
    """Test crossing enumeration against the convex-quadruple oracle"""
    points = random_point_set(9, np.random.default_rng(seed))
    assert len(enumerate_crossings(points)) == convex_quadruple_count(points)


def test_random_point_set_is_reproducible():
    """Test that the same seed gives the same point set in general position"""
    a = random_point_set(12, np.random.default_rng(42))
    b = random_point_set(12, np.random.default_rng(42))
    assert a == b
    validate_general_position(a)


@pytest.mark.parametrize("seed", range(4))
def test_orientation_antisymmetric_and_cyclic(seed):
    """Test that swapping two arguments flips the sign and rotating keeps it"""
    points = random_point_set(6, np.random.default_rng(seed))
    for p in points:
        for q in points:
            for r in points:
                base = orientation(p, q, r)
                assert orientation(q, p, r) == -base
                assert orientation(p, r, q) == -base
                assert orientation(q, r, p) == base


@pytest.mark.parametrize("seed", range(4))
def test_segments_cross_is_symmetric(seed):
    points = random_point_set(7, np.random.default_rng(seed))
    segments = points.segments()
    for s in segments:
        for t in segments:
            if s.shares_endpoint(t):
                continue
            assert segments_cross(s, t, points) == segments_cross(t, s, points)


@pytest.mark.parametrize("seed", range(4))
def test_crossings_invariant_under_translation_and_scaling(seed):
    """Test that integer translations and positive integer scalings keep every crossing"""
    rng = np.random.default_rng(seed)
    points = random_point_set(8, rng)
    dx, dy = (int(v) for v in rng.integers(-50, 50, size=2))
    scale = int(rng.integers(2, 9))
    expected = enumerate_crossings(points)
    translated = PointSet((p.x + dx, p.y + dy) for p in points)
    scaled = PointSet((scale * p.x, scale * p.y) for p in points)
    assert enumerate_crossings(translated) == expected
    assert enumerate_crossings(scaled) == expected
