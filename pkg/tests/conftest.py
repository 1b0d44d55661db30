"""Pytest configuration and fixtures"""
import sys
from pathlib import Path

import pytest

# Add src to Python path for imports
src_path = Path(__file__).parent.parent / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

import numpy as np  # noqa: E402

from kcolored.coloring import random_coloring  # noqa: E402
from kcolored.doubling import random_details, random_matching  # noqa: E402
from kcolored.domain.entities import EdgeColoring, PointSet  # noqa: E402
from kcolored.geometry import random_point_set  # noqa: E402


@pytest.fixture
def square() -> PointSet:
    """Four points in convex position; only the diagonals (0,2) and (1,3) cross"""
    return PointSet([(0, 0), (4, 0), (4, 4), (0, 4)])


@pytest.fixture
def triangle() -> PointSet:
    return PointSet([(0, 0), (6, 1), (2, 5)])


@pytest.fixture
def square_diagonals_split(square) -> EdgeColoring:
    """k=2 coloring of the square: diagonal (0,2) color 1, diagonal (1,3) color 2"""
    # pairs: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
    return EdgeColoring(4, 2, [1, 1, 1, 1, 2, 1])


@pytest.fixture
def make_instance():
    """Factory for random instances with a valid matching and details"""

    def _make(n: int, k: int, seed: int):
        rng = np.random.default_rng(seed)
        points = random_point_set(n, rng)
        chi = random_coloring(n, k, rng)
        m = random_matching(n, rng)
        details = random_details(chi, m, rng)
        return points, chi, m, details

    return _make
