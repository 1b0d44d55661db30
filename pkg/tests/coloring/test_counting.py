"""Tests for crossing counts and the crossing graph"""
from itertools import combinations
from math import comb

import numpy as np
import pytest

from kcolored.coloring import (
    build_crossing_graph,
    count_crossings,
    count_monochromatic,
    monochromatic_adjacencies,
    random_coloring,
)
from kcolored.domain.entities import EdgeColoring, PointSet
from kcolored.domain.errors import InvalidColoringError
from kcolored.geometry import convex_point_set, enumerate_crossings, random_point_set, segments_cross


def _brute_force_monochromatic(points: PointSet, chi: EdgeColoring) -> int:
    total = 0
    for s, t in combinations(points.segments(), 2):
        if s.shares_endpoint(t) or chi[s] != chi[t]:
            continue
        total += segments_cross(s, t, points)
    return total


def test_square_bichromatic_diagonals(square, square_diagonals_split):
    """Test that differently colored diagonals give no monochromatic crossing"""
    assert count_crossings(square) == 1
    assert count_monochromatic(square, square_diagonals_split) == 0


def test_square_single_color(square):
    """Test that one color keeps the diagonal crossing"""
    assert count_monochromatic(square, EdgeColoring.uniform(4, 1)) == 1


def test_triangle_has_no_crossings(triangle):
    """Test n=3"""
    assert count_crossings(triangle) == 0


def test_convex_single_color_counts_all_quadruples():
    """Test that a convex drawing with one color has C(n,4) monochromatic crossings"""
    points = convex_point_set(10)
    assert count_monochromatic(points, EdgeColoring.uniform(10, 1)) == comb(10, 4)


@pytest.mark.parametrize("seed", range(5))
def test_monochromatic_matches_pairwise_oracle(seed):
    """Test the vectorised count against pairwise crossing tests"""
    rng = np.random.default_rng(seed)
    points = random_point_set(9, rng)
    chi = random_coloring(9, 3, rng)
    assert count_monochromatic(points, chi) == _brute_force_monochromatic(points, chi)


def test_crossing_graph_adjacency_is_crossing_count(make_instance):
    """Test that monochromatic adjacencies of the crossing graph equal monochromatic crossings"""
    points, chi, _, _ = make_instance(8, 2, seed=11)
    graph = build_crossing_graph(points)
    assert graph.number_of_nodes() == comb(8, 2)
    assert graph.number_of_edges() == count_crossings(points)
    assert monochromatic_adjacencies(graph, chi) == count_monochromatic(points, chi)


def test_count_rejects_mismatched_coloring(square):
    """Test that a coloring for another n is rejected"""
    with pytest.raises(InvalidColoringError):
        count_monochromatic(square, EdgeColoring.uniform(5, 1))


@pytest.mark.parametrize("seed", range(5))
def test_monochromatic_and_bichromatic_sum_to_total(seed):
    rng = np.random.default_rng(seed)
    points = random_point_set(9, rng)
    chi = random_coloring(9, 3, rng)
    bichromatic = sum(1 for s, t in enumerate_crossings(points) if chi[s] != chi[t])
    assert count_monochromatic(points, chi) + bichromatic == count_crossings(points)


@pytest.mark.parametrize("seed", range(5))
def test_count_ignores_color_names(seed):
    """Test that permuting the colors leaves the count unchanged"""
    rng = np.random.default_rng(seed)
    points = random_point_set(9, rng)
    chi = random_coloring(9, 3, rng)
    permutation = dict(zip((1, 2, 3), (int(c) for c in rng.permutation([1, 2, 3])), strict=True))
    assert count_monochromatic(points, chi.relabeled(permutation)) == count_monochromatic(points, chi)


@pytest.mark.parametrize("seed", range(5))
def test_refining_a_coloring_never_increases_the_count(seed):
    """Test that splitting one color class into two cannot add monochromatic crossings"""
    rng = np.random.default_rng(seed)
    points = random_point_set(9, rng)
    chi = random_coloring(9, 2, rng)
    split = [3 if c == 1 and rng.random() < 0.5 else c for c in chi.colors]
    refined = EdgeColoring(9, 3, split)
    assert count_monochromatic(points, refined) <= count_monochromatic(points, chi)
