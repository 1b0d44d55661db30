"""Exact crossing counts and the crossing graph"""
from collections.abc import Mapping
from typing import Any

import networkx as nx
import numpy as np

from kcolored.domain.entities import EdgeColoring, PointSet, Segment
from kcolored.domain.errors import InvalidColoringError
from kcolored.geometry import crossing_rows, iter_crossing_index_pairs, segment_arrays, validate_general_position

_CHUNK = 256


def _count_within(table: np.ndarray, seg_a: np.ndarray, seg_b: np.ndarray) -> int:
    """Crossing pairs among the given segments"""
    m = len(seg_a)
    total = 0
    columns = np.arange(m)
    for start in range(0, m, _CHUNK):
        rows = np.arange(start, min(start + _CHUNK, m))
        block = crossing_rows(table, seg_a, seg_b, rows, seg_a, seg_b)
        total += int(np.count_nonzero(block & (columns[None, :] > rows[:, None])))
    return total


def count_crossings(points: PointSet, table: np.ndarray | None = None) -> int:
    """Total number of crossing segment pairs, independent of any coloring"""
    if table is None:
        table = validate_general_position(points)
    seg_a, seg_b = segment_arrays(len(points))
    return _count_within(table, seg_a, seg_b)


def count_monochromatic(points: PointSet, chi: EdgeColoring, table: np.ndarray | None = None) -> int:
    """Number of crossing pairs whose segments have the same color"""
    if chi.n != len(points):
        raise InvalidColoringError(f"Coloring is for K_{chi.n} but the drawing has {len(points)} points")
    if table is None:
        table = validate_general_position(points)
    seg_a, seg_b = segment_arrays(len(points))
    labels = np.asarray(chi.colors)
    total = 0
    for color in np.unique(labels):
        members = np.flatnonzero(labels == color)
        total += _count_within(table, seg_a[members], seg_b[members])
    return total


def incident_monochromatic(
    table: np.ndarray, seg_a: np.ndarray, seg_b: np.ndarray, labels: np.ndarray, incident: np.ndarray
) -> int:
    """Monochromatic crossings involving at least one of the given segments

    The segments must share a common endpoint, so no pair among them crosses
    and nothing is counted twice.
    """
    block = crossing_rows(table, seg_a, seg_b, incident, seg_a, seg_b)
    same = labels[incident][:, None] == labels[None, :]
    return int(np.count_nonzero(block & same))


def build_crossing_graph(points: PointSet) -> nx.Graph:
    """Graph on the C(n,2) segments, adjacent iff the segments cross"""
    table = validate_general_position(points)
    segments = points.segments()
    graph = nx.Graph(n=len(points))
    graph.add_nodes_from(segments)
    graph.add_edges_from((segments[s], segments[t]) for s, t in iter_crossing_index_pairs(table))
    return graph


def monochromatic_adjacencies(graph: nx.Graph, coloring: EdgeColoring | Mapping[Any, int]) -> int:
    """Edges of the crossing graph whose endpoints received the same color"""
    return sum(1 for u, v in graph.edges if coloring[u] == coloring[v])


def graph_order(graph: nx.Graph) -> int:
    """Number of drawing vertices behind a crossing graph"""
    if "n" in graph.graph:
        return int(graph.graph["n"])
    segments: list[Segment] = list(graph.nodes)
    return max((s.b for s in segments), default=0) + 1


def random_coloring(n: int, k: int, rng: np.random.Generator) -> EdgeColoring:
    """Uniformly random total coloring"""
    size = n * (n - 1) // 2
    return EdgeColoring(n, k, [int(c) for c in rng.integers(1, k + 1, size=size)])
