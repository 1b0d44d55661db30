"""Tests for domain type definitions"""
from typing import get_args

from kcolored.domain.types import (
    CROSSING_CLASS_TYPE,
    CROSSING_CLASSES,
    FIRST_TARGET_TYPE,
    FIRST_TARGETS,
    SECOND_TARGET_TYPE,
    SECOND_TARGETS,
    SIDE_TYPE,
    SIDES,
)


def test_constants_match_literals():
    """Test that the tuples enumerate their Literal types in order"""
    assert SIDES == get_args(SIDE_TYPE)
    assert FIRST_TARGETS == get_args(FIRST_TARGET_TYPE)
    assert SECOND_TARGETS == get_args(SECOND_TARGET_TYPE)
    assert CROSSING_CLASSES == get_args(CROSSING_CLASS_TYPE)


def test_second_child_never_targets_sibling():
    assert "S" in FIRST_TARGETS
    assert "S" not in SECOND_TARGETS
