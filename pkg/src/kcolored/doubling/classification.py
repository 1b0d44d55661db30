"""Classification of monochromatic crossings after one doubling step"""
from collections import Counter
from math import comb

from kcolored.coloring.counting import count_monochromatic
from kcolored.domain.entities import EdgeColoring, Matching, PointSet
from kcolored.domain.types import CROSSING_CLASS_TYPE, CROSSING_CLASSES
from kcolored.geometry import iter_crossing_index_pairs, orientation_table, segment_arrays

from .construction import DoubledDrawing, side_counts


def _classify(parents: list[int], m: Matching) -> CROSSING_CLASS_TYPE:
    distinct = set(parents)
    if len(distinct) == 2:
        return "I"
    if len(distinct) == 4:
        return "III"
    doubled = next(v for v in distinct if parents.count(v) == 2)
    others = distinct - {doubled}
    return "IIb" if m[doubled] in others else "IIa"


def crossing_type_counts(matching: Matching, drawing: DoubledDrawing) -> Counter[CROSSING_CLASS_TYPE]:
    """Monochromatic crossings of a one-step doubling grouped by how many parents they involve

    Two parents: class I. Three parents: IIb when the doubled parent's target
    is one of the other two, IIa otherwise. Four parents: class III.
    `matching` is the matching of the drawing that was doubled.
    """
    table = orientation_table(drawing.points)
    seg_a, seg_b = segment_arrays(len(drawing.points))
    colors = drawing.coloring.colors
    counts: Counter[CROSSING_CLASS_TYPE] = Counter({name: 0 for name in CROSSING_CLASSES})
    for s, t in iter_crossing_index_pairs(table):
        if colors[s] != colors[t]:
            continue
        endpoints = (seg_a[s], seg_b[s], seg_a[t], seg_b[t])
        parents = [drawing.parent[int(v)][0] for v in endpoints]
        counts[_classify(parents, matching)] += 1
    return counts


def predicted_type_counts(points: PointSet, chi: EdgeColoring, m: Matching) -> Counter[CROSSING_CLASS_TYPE]:
    """Per-class monochromatic crossings one doubling step must produce"""
    n = len(points)
    same_side_pairs = 0
    matched_color_edges = 0
    for p in range(n):
        counts = side_counts(points, chi, m, p)
        same_side_pairs += sum(comb(value, 2) for _, _, value in counts.items())
        cbar = m.matched_color(chi, p)
        matched_color_edges += counts.get(cbar, "left") + counts.get(cbar, "right")
    return Counter(
        {
            "I": comb(n, 2) - n,
            "IIa": 4 * same_side_pairs,
            "IIb": 2 * matched_color_edges,
            "III": 16 * count_monochromatic(points, chi),
        }
    )
