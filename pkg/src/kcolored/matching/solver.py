"""Minimum-weight matching without 2-cycles as a min-cost flow

Every vertex p sends one unit of flow through exactly one unordered pair
{p, q}; each pair accepts at most one unit, so p -> q and q -> p are never
both chosen.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import networkx as nx

from kcolored.domain.entities import Details, EdgeColoring, Matching, PointSet
from kcolored.domain.errors import InvariantViolation
from kcolored.infrastructure.logging import get_logger

from .weights import WeightTable, build_weights

logger = get_logger("kcolored.matching")

SOURCE = "source"
SINK = "sink"


@dataclass(frozen=True)
class MatchingSolution:
    matching: Matching
    details: tuple[Details, ...]
    total_weight: Fraction


class BipartiteInstance:
    """Vertices on one side, unordered pairs on the other, edge (p, {p, q}) weighted w(p, q)"""

    def __init__(self, weights: WeightTable):
        if weights.n < 3:
            raise ValueError(f"A matching without 2-cycles needs n >= 3, got {weights.n}")
        self.weights = weights
        self.n = weights.n
        self.scale = lcm(*(w.denominator for w in weights.weights.values()))
        # target q of vertex p is digit p of a base-n number below n**n, so
        # among equal weights the lexicographically smallest target tuple wins
        self.tie_unit = self.n**self.n

    def tie_cost(self, p: int, q: int) -> int:
        return q * self.n ** (self.n - 1 - p)

    def integer_cost(self, p: int, q: int) -> int:
        scaled = self.weights.weight(p, q) * self.scale
        assert scaled.denominator == 1
        return int(scaled) * self.tie_unit + self.tie_cost(p, q)

    def flow_network(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_node(SOURCE, demand=-self.n)
        graph.add_node(SINK, demand=self.n)
        for p in range(self.n):
            graph.add_edge(SOURCE, ("vertex", p), capacity=1, weight=0)
            for q in range(self.n):
                if q == p:
                    continue
                pair = ("pair", min(p, q), max(p, q))
                graph.add_edge(("vertex", p), pair, capacity=1, weight=self.integer_cost(p, q))
        for a in range(self.n):
            for b in range(a + 1, self.n):
                graph.add_edge(("pair", a, b), SINK, capacity=1, weight=0)
        return graph

    def solve(self) -> MatchingSolution:
        graph = self.flow_network()
        try:
            flow = nx.min_cost_flow(graph)
        except nx.NetworkXUnfeasible as exc:
            raise InvariantViolation(f"No matching without 2-cycles exists for n={self.n}") from exc

        targets = [-1] * self.n
        for p in range(self.n):
            for pair, units in flow[("vertex", p)].items():
                if units:
                    _, a, b = pair
                    targets[p] = b if a == p else a
        if -1 in targets:
            raise InvariantViolation(f"Flow left vertex {targets.index(-1)} unmatched")

        matching = Matching(targets)
        details = tuple(self.weights.details(p, q) for p, q in enumerate(targets))
        return MatchingSolution(matching, details, self.weights.total(targets))


def optimal_matching(weights: WeightTable) -> MatchingSolution:
    """Matching and details minimising the sum of local alphas

    Among matchings of equal weight the lexicographically smallest target
    tuple is returned, the same one brute_force_matching finds.
    """
    solution = BipartiteInstance(weights).solve()
    logger.info(f"Optimal matching for n={weights.n}: total local alpha {solution.total_weight}")
    return solution


def solve_instance(points: PointSet, chi: EdgeColoring) -> MatchingSolution:
    return optimal_matching(build_weights(points, chi))
