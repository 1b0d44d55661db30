"""Exact planar predicates and crossing enumeration for straight-line drawings"""
from collections.abc import Iterator
from itertools import combinations

import numpy as np

from kcolored.domain.entities import Point, PointSet, Segment
from kcolored.domain.errors import GeneralPositionError, SharedEndpointError
from kcolored.domain.types import SIDE_TYPE

# Coordinates below this bound keep every orientation determinant inside int64
_INT64_SAFE_COORD = 1 << 29


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the signed area of triangle pqr: +1 counterclockwise, -1 clockwise, 0 collinear"""
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (det > 0) - (det < 0)


def side_of_directed_line(p: Point, q: Point, r: Point) -> SIDE_TYPE:
    """Side of r relative to the line through p and q, directed from p toward q"""
    sign = orientation(p, q, r)
    if sign == 0:
        raise GeneralPositionError(f"Point {r.to_tuple()} lies on the line through {p.to_tuple()} and {q.to_tuple()}")
    return "left" if sign > 0 else "right"


def segments_cross(s: Segment, t: Segment, points: PointSet) -> bool:
    """True iff the open segments s and t intersect

    Under general position this is exactly: each segment separates the
    endpoints of the other.
    """
    if s.shares_endpoint(t):
        raise SharedEndpointError(f"Segments {s} and {t} share an endpoint")
    a, b, c, d = points[s.a], points[s.b], points[t.a], points[t.b]
    return orientation(a, b, c) * orientation(a, b, d) < 0 and orientation(c, d, a) * orientation(c, d, b) < 0


def _integer_arrays(points: PointSet) -> tuple[np.ndarray, np.ndarray]:
    """Coordinate arrays on int64 when safe, otherwise on exact Python integers"""
    integral = points if points.is_integral() else points.scaled_to_integers()
    xs = [int(p.x) for p in integral]
    ys = [int(p.y) for p in integral]
    bound = max((abs(v) for v in xs + ys), default=0)
    dtype = np.int64 if bound < _INT64_SAFE_COORD else object
    return np.array(xs, dtype=dtype), np.array(ys, dtype=dtype)


def _sign(values: np.ndarray) -> np.ndarray:
    return (values > 0).astype(np.int8) - (values < 0).astype(np.int8)


def orientation_table(points: PointSet) -> np.ndarray:
    """Orientation of every ordered triple as an (n, n, n) int8 array

    table[i, j, l] == orientation(points[i], points[j], points[l]).
    """
    xs, ys = _integer_arrays(points)
    dx = xs[None, :] - xs[:, None]
    dy = ys[None, :] - ys[:, None]
    det = dx[:, :, None] * dy[:, None, :] - dy[:, :, None] * dx[:, None, :]
    return _sign(det)


def orientation_slice(xs: np.ndarray, ys: np.ndarray, v: int) -> np.ndarray:
    """Orientations (v, j, l) for all j, l as an (n, n) int8 array"""
    dx = xs - xs[v]
    dy = ys - ys[v]
    return _sign(dx[:, None] * dy[None, :] - dy[:, None] * dx[None, :])


def _distinct_triple_mask(n: int) -> np.ndarray:
    idx = np.arange(n)
    return (idx[:, None, None] != idx[None, :, None]) & (idx[:, None, None] != idx[None, None, :]) & (
        idx[None, :, None] != idx[None, None, :]
    )


def first_collinear_triple(table: np.ndarray) -> tuple[int, int, int] | None:
    """Lexicographically first triple i < j < l with zero orientation, if any"""
    n = table.shape[0]
    zeros = np.argwhere((table == 0) & _distinct_triple_mask(n))
    for i, j, l in zeros:
        if i < j < l:
            return int(i), int(j), int(l)
    return None


def validate_general_position(points: PointSet, table: np.ndarray | None = None) -> np.ndarray:
    """Raise GeneralPositionError naming the offending triple; return the orientation table"""
    if table is None:
        table = orientation_table(points)
    triple = first_collinear_triple(table)
    if triple is not None:
        coords = [points[i].to_tuple() for i in triple]
        raise GeneralPositionError(f"Vertices {triple} are collinear: {coords}", triple=triple)
    return table


def segment_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Endpoint arrays of all C(n,2) segments in lexicographic order"""
    rows, cols = np.triu_indices(n, k=1)
    return rows.astype(np.intp), cols.astype(np.intp)


def crossing_rows(
    table: np.ndarray,
    seg_a: np.ndarray,
    seg_b: np.ndarray,
    rows: np.ndarray,
    others_a: np.ndarray,
    others_b: np.ndarray,
) -> np.ndarray:
    """Boolean matrix: segment rows[r] crosses segment (others_a[c], others_b[c])

    Segments sharing an endpoint produce a zero orientation and never count.
    """
    ra = seg_a[rows][:, None]
    rb = seg_b[rows][:, None]
    oa = others_a[None, :]
    ob = others_b[None, :]
    first = table[ra, rb, oa].astype(np.int16) * table[ra, rb, ob]
    second = table[oa, ob, ra].astype(np.int16) * table[oa, ob, rb]
    return (first < 0) & (second < 0)


def iter_crossing_index_pairs(table: np.ndarray, chunk: int = 256) -> Iterator[tuple[int, int]]:
    """Index pairs (s, t), s < t, of crossing segments in lexicographic segment order"""
    seg_a, seg_b = segment_arrays(table.shape[0])
    m = len(seg_a)
    for start in range(0, m, chunk):
        rows = np.arange(start, min(start + chunk, m))
        block = crossing_rows(table, seg_a, seg_b, rows, seg_a, seg_b)
        upper = np.arange(m)[None, :] > rows[:, None]
        for r, t in np.argwhere(block & upper):
            yield int(rows[r]), int(t)


def enumerate_crossings(points: PointSet) -> list[tuple[Segment, Segment]]:
    """All unordered pairs of endpoint-disjoint crossing segments"""
    table = validate_general_position(points)
    segments = points.segments()
    return [(segments[s], segments[t]) for s, t in iter_crossing_index_pairs(table)]


def in_convex_position(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Four points in general position are in convex position iff none lies inside the others' triangle"""
    quad = (a, b, c, d)
    for index, candidate in enumerate(quad):
        x, y, z = (quad[i] for i in range(4) if i != index)
        signs = {orientation(x, y, candidate), orientation(y, z, candidate), orientation(z, x, candidate)}
        if len(signs) == 1:
            return False
    return True


def convex_quadruple_count(points: PointSet) -> int:
    """Number of 4-subsets in convex position (independent crossing oracle)"""
    return sum(1 for quad in combinations(points, 4) if in_convex_position(*quad))


def convex_point_set(n: int) -> PointSet:
    """Points (i, i^2): convex and in general position"""
    return PointSet(Point(i, i * i) for i in range(n))


def random_point_set(n: int, rng: np.random.Generator, grid: int | None = None, max_tries: int = 10_000) -> PointSet:
    """Integer points in [0, grid)^2 in general position, drawn by rejection"""
    if grid is None:
        grid = max(8 * n, 16)
    chosen: list[Point] = []
    tries = 0
    while len(chosen) < n:
        tries += 1
        if tries > max_tries:
            raise GeneralPositionError(f"Could not place {n} points in general position on a {grid}x{grid} grid")
        candidate = Point(int(rng.integers(0, grid)), int(rng.integers(0, grid)))
        if candidate in chosen:
            continue
        if any(orientation(p, q, candidate) == 0 for p, q in combinations(chosen, 2)):
            continue
        chosen.append(candidate)
    return PointSet(chosen)
