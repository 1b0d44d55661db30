"""Offsets of the side-count recurrence under one doubling step"""
from collections.abc import Sequence
from typing import Literal

from kcolored.domain.entities import Details, EdgeColoring, Matching, OffsetPair, PointSet
from kcolored.domain.errors import InvariantViolation
from kcolored.domain.types import SIDE_TYPE

from .construction import DoubledDrawing, double_once, side_counts

_EdgeRole = Literal["sibling", "cross"]

# Local edges of each child that are not its matching edge, as (role, side).
# "cross" edges join a child to a child of the parent's target and keep the
# parent's matched color; the "sibling" edge has the detail color.
_FIRST_CHILD_EDGES: dict[str, tuple[tuple[_EdgeRole, SIDE_TYPE], ...]] = {
    "S": (("cross", "left"), ("cross", "right")),
    "L": (("sibling", "right"), ("cross", "right")),
    "R": (("sibling", "left"), ("cross", "left")),
}
_SECOND_CHILD_EDGES: dict[str, tuple[tuple[_EdgeRole, SIDE_TYPE], ...]] = {
    "L": (("sibling", "left"), ("cross", "right")),
    "R": (("sibling", "right"), ("cross", "left")),
}


def _count(edges: tuple[tuple[_EdgeRole, SIDE_TYPE], ...], details: Details, cbar: int, color: int, side: SIDE_TYPE):
    total = 0
    for role, edge_side in edges:
        edge_color = details.c_prime if role == "sibling" else cbar
        if edge_color == color and edge_side == side:
            total += 1
    return total


def local_offsets(details: Details, cbar: int, color: int, side: SIDE_TYPE) -> OffsetPair:
    """Offset pair at a vertex with matched color cbar, for one (color, side) cell"""
    return OffsetPair(
        _count(_FIRST_CHILD_EDGES[details.m1], details, cbar, color, side),
        _count(_SECOND_CHILD_EDGES[details.m2], details, cbar, color, side),
    )


def extract_offsets(
    points: PointSet,
    chi: EdgeColoring,
    m: Matching,
    details: Sequence[Details],
    p: int,
    color: int,
    side: SIDE_TYPE,
    drawing: DoubledDrawing | None = None,
) -> OffsetPair:
    """Measure the offset pair at p on an explicit doubling step

    `drawing` may carry a precomputed double_once result for the same input.
    """
    if drawing is None:
        drawing = double_once(points, chi, m, details)
    base = side_counts(points, chi, m, p).get(color, side)
    first_child, second_child = drawing.children(p)
    first = side_counts(drawing.points, drawing.coloring, drawing.matching, first_child).get(color, side)
    second = side_counts(drawing.points, drawing.coloring, drawing.matching, second_child).get(color, side)
    try:
        return OffsetPair(first - 2 * base, second - 2 * base)
    except InvariantViolation as exc:
        raise InvariantViolation(f"Vertex {p}, color {color}, side {side}: {exc}") from exc
