"""Crossing counts of the iterated doubling and their asymptotic coefficients

The count after t doubling steps is alpha 16^t + beta 8^t + gamma 4^t + delta 2^t.
theorem1_count evaluates the tree sums term by term; coefficients() assembles
the same quantity from the closed forms.
"""
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from kcolored.coloring.counting import count_monochromatic
from kcolored.doubling import local_offsets, side_counts, validate_details
from kcolored.domain.entities import Details, EdgeColoring, Matching, PointSet, SideCounts
from kcolored.domain.errors import InvariantViolation
from kcolored.domain.types import SIDES
from kcolored.geometry import validate_general_position
from kcolored.infrastructure.logging import get_logger

from .closed_forms import TermCoeffs, direct_sum_A, direct_sum_B, direct_sum_C, term_A, term_B, term_C

logger = get_logger("kcolored.asymptotics")


@dataclass(frozen=True)
class AsymptoticCoeffs:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def evaluate(self, t: int) -> Fraction:
        return self.alpha * 16**t + self.beta * 8**t + self.gamma * 4**t + self.delta * 2**t

    def total(self) -> Fraction:
        return self.alpha + self.beta + self.gamma + self.delta

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def validate(self, crossings: int):
        """Raise InvariantViolation unless alpha > 0, beta < 0 and the coefficients sum to `crossings`"""
        if self.alpha <= 0:
            raise InvariantViolation(f"Leading coefficient must be positive, got {self.alpha}")
        if self.beta >= 0:
            raise InvariantViolation(f"Coefficient of 8^t must be negative, got {self.beta}")
        if self.total() != crossings:
            raise InvariantViolation(f"Coefficients sum to {self.total()}, expected {crossings} crossings")


def local_terms(counts: SideCounts, cbar: int, details: Details) -> TermCoeffs:
    """All four coefficients attributable to one vertex"""
    terms = TermCoeffs()
    for color, side, value in counts.items():
        terms = terms + term_B(local_offsets(details, cbar, color, side), value).scaled(4)
    for side in SIDES:
        terms = terms + term_C(local_offsets(details, cbar, cbar, side), counts.get(cbar, side)).scaled(2)
    return terms


def local_alpha(counts: SideCounts, cbar: int, details: Details) -> Fraction:
    """Share of the leading coefficient owed to one vertex, given its side counts and details"""
    return local_terms(counts, cbar, details).c4


def _check_instance(points: PointSet, chi: EdgeColoring, m: Matching, details: Sequence[Details]):
    if len(points) != chi.n or len(m) != chi.n:
        raise ValueError(f"Sizes disagree: {len(points)} points, coloring of K_{chi.n}, matching of {len(m)}")
    validate_details(chi, m, details)


def theorem1_count(
    points: PointSet, chi: EdgeColoring, m: Matching, details: Sequence[Details], t: int
) -> int:
    """Monochromatic crossings after t doubling steps, summed level by level"""
    if t < 0:
        raise ValueError(f"Number of doubling steps must be >= 0, got {t}")
    _check_instance(points, chi, m, details)
    table = validate_general_position(points)
    n = len(points)

    total = 16**t * count_monochromatic(points, chi, table) + direct_sum_A(n, t)
    for p in range(n):
        counts = side_counts(points, chi, m, p)
        cbar = m.matched_color(chi, p)
        for color, side, value in counts.items():
            total += 4 * direct_sum_B(local_offsets(details[p], cbar, color, side), value, t)
        for side in SIDES:
            total += 2 * direct_sum_C(local_offsets(details[p], cbar, cbar, side), counts.get(cbar, side), t)
    return total


def coefficients(points: PointSet, chi: EdgeColoring, m: Matching, details: Sequence[Details]) -> AsymptoticCoeffs:
    """Exact alpha, beta, gamma, delta for a matched and detailed instance"""
    n = len(points)
    if n < 3:
        raise ValueError(f"Asymptotic coefficients need n >= 3, got {n}")
    _check_instance(points, chi, m, details)
    table = validate_general_position(points)
    crossings = count_monochromatic(points, chi, table)

    terms = term_A(n)
    for p in range(n):
        terms = terms + local_terms(side_counts(points, chi, m, p), m.matched_color(chi, p), details[p])

    coeffs = AsymptoticCoeffs(
        alpha=crossings + terms.c4,
        beta=terms.c3,
        gamma=terms.c2,
        delta=terms.c1,
    )
    coeffs.validate(crossings)
    logger.debug(f"Coefficients for n={n}, k={chi.k}: alpha={coeffs.alpha}")
    return coeffs


def fit_coefficients(values: Sequence[int | Fraction]) -> AsymptoticCoeffs:
    """Solve for the four coefficients from counts at t = 0, 1, 2, 3"""
    if len(values) != 4:
        raise ValueError(f"Need counts at t = 0..3, got {len(values)} values")
    rows = [[Fraction(base**t) for base in (16, 8, 4, 2)] + [Fraction(values[t])] for t in range(4)]
    for col in range(4):
        pivot = next(r for r in range(col, 4) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [value / lead for value in rows[col]]
        for r in range(4):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return AsymptoticCoeffs(*(rows[r][4] for r in range(4)))
