"""MAX-k-CUT local search on the crossing graph and integer point perturbation"""
from collections.abc import Hashable

import networkx as nx
import numpy as np

from kcolored.domain.entities import EdgeColoring, Point, PointSet
from kcolored.geometry import orientation_slice, segment_arrays, validate_general_position
from kcolored.infrastructure.logging import get_logger

from .counting import (
    build_crossing_graph,
    count_monochromatic,
    graph_order,
    incident_monochromatic,
    monochromatic_adjacencies,
)
from .search_config import SearchConfig

logger = get_logger("kcolored.coloring.search")


def _restart_rng(seed: int, stream: int, restart: int) -> np.random.Generator:
    return np.random.default_rng([seed, stream, restart])


def local_search_k_cut(
    graph: nx.Graph,
    k: int,
    rng: np.random.Generator | None = None,
    initial: dict[Hashable, int] | None = None,
) -> dict[Hashable, int]:
    """Vertex k-coloring with no improving single-vertex recolor

    Without `initial`, vertices are colored greedily in random order, each
    taking the color with the fewest already-colored neighbors (lowest index on
    ties). Then first-improvement single-vertex moves run to a local optimum.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    nodes = list(graph.nodes)
    index = {node: i for i, node in enumerate(nodes)}
    adjacency = [[index[u] for u in graph.adj[node]] for node in nodes]
    counts = [[0] * (k + 1) for _ in nodes]
    colors = [0] * len(nodes)

    def assign(v: int, color: int):
        colors[v] = color
        for u in adjacency[v]:
            counts[u][color] += 1

    if initial is not None:
        for v, node in enumerate(nodes):
            assign(v, initial[node])
    else:
        if rng is None:
            rng = np.random.default_rng(0)
        for v in rng.permutation(len(nodes)):
            v = int(v)
            row = counts[v]
            assign(v, min(range(1, k + 1), key=lambda c: (row[c], c)))

    improved = True
    while improved:
        improved = False
        for v in range(len(nodes)):
            row = counts[v]
            current = colors[v]
            best = min(range(1, k + 1), key=lambda c: (row[c], c))
            if row[best] < row[current]:
                for u in adjacency[v]:
                    counts[u][current] -= 1
                    counts[u][best] += 1
                colors[v] = best
                improved = True

    return {node: colors[v] for v, node in enumerate(nodes)}


def max_k_cut_local_search(
    graph: nx.Graph,
    k: int,
    cfg: SearchConfig,
    initial: EdgeColoring | None = None,
    stream: int = 0,
) -> EdgeColoring:
    """Best 1-move-optimal coloring over cfg.restarts random restarts

    The graph's vertices must be all segments of K_n. When `initial` is given it
    is also polished by local search and competes with the restarts, so the
    result is never worse than it.
    """
    n = graph_order(graph)
    best: dict[Hashable, int] | None = None
    best_score = 0

    candidates = []
    if initial is not None:
        candidates.append(("warm", local_search_k_cut(graph, k, initial=initial.as_mapping())))
    for restart in range(cfg.restarts):
        rng = _restart_rng(cfg.rng_seed, stream, restart)
        candidates.append((f"restart-{restart}", local_search_k_cut(graph, k, rng=rng)))

    for label, assignment in candidates:
        score = monochromatic_adjacencies(graph, assignment)
        logger.debug(f"MAX-{k}-CUT {label}: {score} monochromatic adjacencies")
        if best is None or score < best_score:
            best, best_score = assignment, score

    return EdgeColoring.from_mapping(n, k, best)


def _moves(radius: int) -> list[tuple[int, int]]:
    moves = [(dx, dy) for dx in range(-radius, radius + 1) for dy in range(-radius, radius + 1) if (dx, dy) != (0, 0)]
    return sorted(moves, key=lambda m: (max(abs(m[0]), abs(m[1])), m))


def perturb_points(points: PointSet, chi: EdgeColoring, cfg: SearchConfig) -> PointSet:
    """Greedy single-point integer moves that strictly lower the monochromatic count

    Moves stay within Chebyshev radius cfg.perturbation_radius and are rejected
    when they break general position. Returns the input unchanged when no
    improving move exists.
    """
    if not points.is_integral():
        raise ValueError("Point perturbation works on integer coordinates only")
    table = validate_general_position(points).copy()
    n = len(points)
    coords = [(int(p.x), int(p.y)) for p in points]
    bound = max((abs(v) for xy in coords for v in xy), default=0) + cfg.perturbation_radius
    dtype = np.int64 if bound < (1 << 29) else object
    xs = np.array([x for x, _ in coords], dtype=dtype)
    ys = np.array([y for _, y in coords], dtype=dtype)

    seg_a, seg_b = segment_arrays(n)
    labels = np.asarray(chi.colors)
    incident = [np.flatnonzero((seg_a == v) | (seg_b == v)) for v in range(n)]
    idx = np.arange(n)
    off_diagonal = idx[:, None] != idx[None, :]
    moves = _moves(cfg.perturbation_radius)
    accepted = 0

    for pass_index in range(cfg.max_perturbation_passes):
        improved = False
        for v in range(n):
            before = incident_monochromatic(table, seg_a, seg_b, labels, incident[v])
            if before == 0:
                continue
            saved = (table[v, :, :].copy(), table[:, v, :].copy(), table[:, :, v].copy())
            others = off_diagonal & (idx[:, None] != v) & (idx[None, :] != v)
            x0, y0 = xs[v], ys[v]
            for dx, dy in moves:
                xs[v], ys[v] = x0 + dx, y0 + dy
                fresh = orientation_slice(xs, ys, v)
                if np.any((fresh == 0) & others):
                    continue
                table[v, :, :] = fresh
                table[:, v, :] = -fresh
                table[:, :, v] = fresh
                after = incident_monochromatic(table, seg_a, seg_b, labels, incident[v])
                if after < before:
                    accepted += 1
                    improved = True
                    break
                table[v, :, :], table[:, v, :], table[:, :, v] = saved
            else:
                xs[v], ys[v] = x0, y0
        logger.debug(f"Perturbation pass {pass_index + 1}: {accepted} accepted moves so far")
        if not improved:
            break

    if accepted == 0:
        return points
    return PointSet(Point(int(x), int(y)) for x, y in zip(xs, ys, strict=True))


def alternate_search(
    initial_points: PointSet,
    k: int,
    cfg: SearchConfig,
    history: list[int] | None = None,
) -> tuple[PointSet, EdgeColoring]:
    """Alternate MAX-k-CUT recoloring and point perturbation

    The count never increases from one round to the next: perturbation only
    accepts strict improvements and a new coloring replaces the current one
    only when it is strictly better on the new points. Stops after
    cfg.max_stale_iterations consecutive rounds without a new best, after
    cfg.max_rounds rounds, or at zero.
    """
    points = initial_points
    validate_general_position(points)
    chi = max_k_cut_local_search(build_crossing_graph(points), k, cfg)
    best = count_monochromatic(points, chi)
    if history is not None:
        history.append(best)
    logger.info(f"Initial coloring: {best} monochromatic crossings (n={len(points)}, k={k})")

    stale = 0
    for round_index in range(1, cfg.max_rounds + 1):
        if best == 0:
            break
        points = perturb_points(points, chi, cfg)
        current = count_monochromatic(points, chi)
        candidate = max_k_cut_local_search(build_crossing_graph(points), k, cfg, initial=chi, stream=round_index)
        candidate_count = count_monochromatic(points, candidate)
        if candidate_count < current:
            chi, current = candidate, candidate_count
        if history is not None:
            history.append(current)

        if current < best:
            best = current
            stale = 0
        else:
            stale += 1
        logger.info(f"Round {round_index}: {current} monochromatic crossings (stale={stale})")
        if stale >= cfg.max_stale_iterations:
            break

    return points, chi
