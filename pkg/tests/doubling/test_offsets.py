"""Tests for the offset table and the crossing classification"""
import pytest

from kcolored.doubling import (
    crossing_type_counts,
    double_iterate,
    double_once,
    enumerate_details,
    extract_offsets,
    local_offsets,
    predicted_type_counts,
)
from kcolored.domain.entities import VALID_OFFSET_PAIRS, Details, OffsetPair
from kcolored.domain.errors import InvariantViolation
from kcolored.domain.types import SIDES


def test_offset_pair_invariants():
    """Test that impossible offset pairs are rejected"""
    with pytest.raises(InvariantViolation):
        OffsetPair(2, 0)
    with pytest.raises(InvariantViolation):
        OffsetPair(3, 1)
    with pytest.raises(InvariantViolation):
        OffsetPair(0, 2)
    assert len(VALID_OFFSET_PAIRS) == 5


def test_local_offsets_sum_per_vertex():
    """Test that the two children gain four non-matching edges in total"""
    for k in (1, 2, 3):
        for cbar in range(1, k + 1):
            for details in enumerate_details(k, cbar):
                offsets = [local_offsets(details, cbar, c, d) for c in range(1, k + 1) for d in SIDES]
                assert sum(o.o1 for o in offsets) == 2
                assert sum(o.o2 for o in offsets) == 2


def test_local_offsets_sibling_target():
    """Test m1 = S: the first child sees both children of the target"""
    details = Details(1, "S", "L")
    assert local_offsets(details, 1, 1, "left") == OffsetPair(1, 1)
    assert local_offsets(details, 1, 1, "right") == OffsetPair(1, 1)


def test_local_offsets_other_sibling_color():
    """Test that the sibling edge's color only shows up in its own cells"""
    details = Details(2, "L", "R")
    assert local_offsets(details, 1, 2, "right") == OffsetPair(1, 1)
    assert local_offsets(details, 1, 2, "left") == OffsetPair(0, 0)
    assert local_offsets(details, 1, 1, "right") == OffsetPair(1, 0)
    assert local_offsets(details, 1, 1, "left") == OffsetPair(0, 1)


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_measured_offsets_match_table(make_instance, seed, k):
    """Test that offsets measured on the explicit construction agree with the table"""
    points, chi, m, details = make_instance(5, k, seed=seed)
    drawing = double_once(points, chi, m, details)
    for p in range(5):
        cbar = m.matched_color(chi, p)
        for color in range(1, k + 1):
            for side in SIDES:
                measured = extract_offsets(points, chi, m, details, p, color, side, drawing=drawing)
                assert measured == local_offsets(details[p], cbar, color, side)


@pytest.mark.parametrize("seed", range(8))
def test_crossing_classes_match_prediction(make_instance, seed):
    """Test every crossing class after one step against its prediction"""
    points, chi, m, details = make_instance(5, 2, seed=seed)
    drawing = double_once(points, chi, m, details)
    assert crossing_type_counts(m, drawing) == predicted_type_counts(points, chi, m)


@pytest.mark.parametrize("p", range(6))
def test_measured_offsets_for_every_detail_choice(make_instance, p):
    """Test every admissible detail at vertex p against the table, n=6 and k=2"""
    points, chi, m, details = make_instance(6, 2, seed=p)
    cbar = m.matched_color(chi, p)
    for choice in enumerate_details(2, cbar):
        trial = list(details)
        trial[p] = choice
        drawing = double_once(points, chi, m, trial)
        for color in (1, 2):
            for side in SIDES:
                measured = extract_offsets(points, chi, m, trial, p, color, side, drawing=drawing)
                assert measured == local_offsets(choice, cbar, color, side)


@pytest.mark.parametrize("seed", range(3))
def test_offsets_repeat_on_the_next_level(make_instance, seed):
    """Test that the children of the first step carry their parent's offsets and matched color"""
    points, chi, m, details = make_instance(5, 2, seed=seed)
    first = double_once(points, chi, m, details)
    second = double_iterate(points, chi, m, details, 2)
    level_points = first.points.scaled_to_integers()
    level_details = [details[v >> 1] for v in range(len(level_points))]
    for u in range(len(level_points)):
        p = u >> 1
        cbar = m.matched_color(chi, p)
        assert first.matching.matched_color(first.coloring, u) == cbar
        for color in (1, 2):
            for side in SIDES:
                measured = extract_offsets(
                    level_points, first.coloring, first.matching, level_details, u, color, side, drawing=second
                )
                assert measured == local_offsets(details[p], cbar, color, side)


def test_offset_table_covers_every_valid_pair():
    """Test that the table only produces the five valid offset pairs, and all of them"""
    seen = set()
    for k in (1, 2, 3):
        for cbar in range(1, k + 1):
            for details in enumerate_details(k, cbar):
                for color in range(1, k + 1):
                    for side in SIDES:
                        seen.add(local_offsets(details, cbar, color, side))
    assert seen == set(VALID_OFFSET_PAIRS)
