"""Pydantic contracts for instances and command reports"""

from fractions import Fraction
from typing import Any
from uuid import uuid4

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from .entities import Details, EdgeColoring, Matching, PointSet
from .types import FIRST_TARGET_TYPE, MATCHING_SOURCE_TYPE, SECOND_TARGET_TYPE

INSTANCE_FORMAT_VERSION = 1


def _parse_fraction(value: Any) -> Any:
    if isinstance(value, (str, int)) and not isinstance(value, bool):
        return Fraction(value)
    return value


def _serialize_fraction(value: Fraction | None) -> str | None:
    if value is None:
        return None
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class InstanceFile(BaseModel):
    """A point set with a total k-edge-coloring, optionally with matching and details"""

    version: int = Field(INSTANCE_FORMAT_VERSION, description="Instance format version")
    k: int = Field(..., ge=1, description="Number of colors")
    n: int = Field(..., ge=1, description="Number of points")
    seed: int | None = Field(None, ge=0, description="Seed the instance was produced with")
    points: list[tuple[int, int]] = Field(..., description="Integer coordinates, one pair per point")
    colors: list[int] = Field(..., description="Colors of the pairs (i, j), i < j, in lexicographic order")
    matching: list[int] | None = Field(None, description="Matching target of every point")
    details: list[tuple[int, FIRST_TARGET_TYPE, SECOND_TARGET_TYPE]] | None = Field(
        None, description="Per-point (sibling color, first child target, second child target)"
    )

    @field_validator("version")
    @classmethod
    def validate_version(cls, v: int) -> int:
        if v != INSTANCE_FORMAT_VERSION:
            raise ValueError(f"Unsupported instance format version {v}, expected {INSTANCE_FORMAT_VERSION}")
        return v

    @model_validator(mode="after")
    def validate_lengths(self) -> "InstanceFile":
        if len(self.points) != self.n:
            raise ValueError(f"Expected {self.n} points, got {len(self.points)}")
        expected = self.n * (self.n - 1) // 2
        if len(self.colors) != expected:
            raise ValueError(f"Expected {expected} colors for n={self.n}, got {len(self.colors)}")
        if any(not 1 <= c <= self.k for c in self.colors):
            raise ValueError(f"Colors must lie in 1..{self.k}")
        if self.matching is not None and len(self.matching) != self.n:
            raise ValueError(f"Expected {self.n} matching targets, got {len(self.matching)}")
        if self.details is not None:
            if self.matching is None:
                raise ValueError("Details require a matching")
            if len(self.details) != self.n:
                raise ValueError(f"Expected {self.n} detail rows, got {len(self.details)}")
        return self

    def point_set(self) -> PointSet:
        return PointSet(self.points)

    def edge_coloring(self) -> EdgeColoring:
        return EdgeColoring(self.n, self.k, self.colors)

    def given_matching(self) -> Matching | None:
        return Matching(self.matching) if self.matching is not None else None

    def given_details(self) -> list[Details] | None:
        if self.details is None:
            return None
        return [Details(c_prime, m1, m2) for c_prime, m1, m2 in self.details]

    @classmethod
    def from_domain(
        cls,
        points: PointSet,
        chi: EdgeColoring,
        matching: Matching | None = None,
        details: list[Details] | tuple[Details, ...] | None = None,
        seed: int | None = None,
    ) -> "InstanceFile":
        if not points.is_integral():
            points = points.scaled_to_integers()
        return cls(
            k=chi.k,
            n=len(points),
            seed=seed,
            points=[(int(x), int(y)) for x, y in points.coordinates()],
            colors=list(chi.colors),
            matching=list(matching.targets) if matching is not None else None,
            details=[d.to_tuple() for d in details] if details is not None else None,
        )

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "version": 1,
                "k": 2,
                "n": 4,
                "points": [[0, 0], [4, 0], [4, 4], [0, 4]],
                "colors": [1, 1, 1, 2, 1, 1],
            }
        }
    )


class CountReport(BaseModel):
    """Crossing counts of an instance"""

    run_id: str = Field(default_factory=lambda: str(uuid4()), description="Run identifier")
    k: int = Field(..., description="Number of colors")
    n: int = Field(..., description="Number of points")
    crossings: int = Field(..., ge=0, description="Crossings of the drawing, any colors")
    monochromatic: int = Field(..., ge=0, description="Crossings between edges of the same color")


class BoundReport(BaseModel):
    """Certified upper bound on the k-colored crossing constant"""

    model_config = ConfigDict(
        arbitrary_types_allowed=True,
        json_schema_extra={
            "example": {
                "k": 2,
                "n": 27,
                "monochromatic": 2325,
                "alpha": "9871/7",
                "bound": "0.19",
                "matching_source": "optimal",
            }
        },
    )

    run_id: str = Field(default_factory=lambda: str(uuid4()), description="Run identifier")
    k: int = Field(..., description="Number of colors")
    n: int = Field(..., description="Number of points of the base drawing")
    crossings: int = Field(..., ge=0, description="Crossings of the base drawing")
    monochromatic: int = Field(..., ge=0, description="Monochromatic crossings of the base drawing")

    # Exact coefficients of 16^t, 8^t, 4^t, 2^t
    alpha: Fraction = Field(..., description="Leading coefficient")
    beta: Fraction = Field(..., description="Coefficient of 8^t")
    gamma: Fraction = Field(..., description="Coefficient of 4^t")
    delta: Fraction = Field(..., description="Coefficient of 2^t")
    alpha_decimal: str = Field(..., description="alpha rounded to 17 significant digits")
    beta_decimal: str = Field(..., description="beta rounded to 17 significant digits")
    gamma_decimal: str = Field(..., description="gamma rounded to 17 significant digits")
    delta_decimal: str = Field(..., description="delta rounded to 17 significant digits")

    # Bound and comparison columns
    bound: Fraction = Field(..., description="24 alpha / n^4")
    bound_decimal: str = Field(..., description="Bound rounded to 17 significant digits")
    book_bound: Fraction = Field(..., description="Convex drawing bound 2/k^2 - 1/k^3")
    lower_bound: Fraction = Field(..., description="Lower bound 3/(29k^2)")
    improvement_factor: Fraction = Field(..., description="book_bound / bound")
    beats_book_bound: bool = Field(..., description="Bound is strictly below the book bound")
    lower_gate_ok: bool = Field(..., description="Bound is at least the lower bound")
    rectilinear_gate_ok: bool | None = Field(None, description="Bound is at least 0.37997 (k = 1 only)")

    # Matching used
    matching_source: MATCHING_SOURCE_TYPE = Field(..., description="optimal or given")
    matching: list[int] = Field(..., description="Matching targets")
    details: list[tuple[int, FIRST_TARGET_TYPE, SECOND_TARGET_TYPE]] = Field(..., description="Details per point")
    side_imbalance: Fraction = Field(..., description="Mean |left - right| side count per vertex and color")
    sampled_best_bound: Fraction | None = Field(None, description="Best bound over random matchings")

    @field_validator(
        "alpha",
        "beta",
        "gamma",
        "delta",
        "bound",
        "book_bound",
        "lower_bound",
        "improvement_factor",
        "side_imbalance",
        "sampled_best_bound",
        mode="before",
    )
    @classmethod
    def parse_fraction(cls, v: Any) -> Any:
        return _parse_fraction(v)

    @field_serializer(
        "alpha",
        "beta",
        "gamma",
        "delta",
        "bound",
        "book_bound",
        "lower_bound",
        "improvement_factor",
        "side_imbalance",
        "sampled_best_bound",
    )
    def serialize_fraction(self, value: Fraction | None) -> str | None:
        return _serialize_fraction(value)


class VerifyStep(BaseModel):
    """Explicit construction against the formula for one number of steps"""

    t: int = Field(..., ge=0, description="Number of doubling steps")
    explicit: int = Field(..., ge=0, description="Monochromatic crossings of the constructed drawing")
    formula: int = Field(..., description="Count predicted by the tree sums")
    mismatch_class: str | None = Field(
        None, description="First crossing class whose count differs, or 'formula'"
    )
    class_counts: dict[str, int] = Field(default_factory=dict, description="Per-class counts of the last step")

    @property
    def passed(self) -> bool:
        return self.explicit == self.formula


class VerifyReport(BaseModel):
    """Verification of the crossing formula and of the coefficient fit"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    run_id: str = Field(default_factory=lambda: str(uuid4()), description="Run identifier")
    k: int = Field(..., description="Number of colors")
    n: int = Field(..., description="Number of points")
    steps: list[VerifyStep] = Field(default_factory=list, description="One row per number of steps")
    fitted: tuple[Fraction, Fraction, Fraction, Fraction] = Field(
        ..., description="Coefficients fitted from the counts at t = 0..3"
    )
    fit_prediction: Fraction = Field(..., description="Fitted count at t = 4")
    formula_t4: int = Field(..., description="Tree-sum count at t = 4")
    coefficients_match: bool = Field(..., description="Fitted coefficients equal the closed-form coefficients")

    @field_validator("fitted", mode="before")
    @classmethod
    def parse_fitted(cls, v: Any) -> Any:
        return tuple(_parse_fraction(x) for x in v)

    @field_validator("fit_prediction", mode="before")
    @classmethod
    def parse_prediction(cls, v: Any) -> Any:
        return _parse_fraction(v)

    @field_serializer("fitted")
    def serialize_fitted(self, value: tuple[Fraction, ...]) -> list[str | None]:
        return [_serialize_fraction(x) for x in value]

    @field_serializer("fit_prediction")
    def serialize_prediction(self, value: Fraction) -> str | None:
        return _serialize_fraction(value)

    @property
    def fit_passed(self) -> bool:
        return self.fit_prediction == self.formula_t4 and self.coefficients_match

    @property
    def passed(self) -> bool:
        return all(step.passed for step in self.steps) and self.fit_passed


class ErrorResponse(BaseModel):
    """Error surfaced by a command"""

    error_type: str = Field(..., description="Exception class name")
    message: str = Field(..., description="Error message")
    exit_code: int = Field(..., description="Process exit code")
    details: dict[str, Any] = Field(default_factory=dict, description="Additional context (line, field, triple)")
