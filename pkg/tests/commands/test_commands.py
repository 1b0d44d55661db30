"""Tests for the count, search, bound and verify commands"""
from fractions import Fraction

import pytest

from kcolored.asymptotics import book_bound, lower_bound, theorem1_count
from kcolored.coloring import SearchPresets
from kcolored.commands import (
    EXIT_ERROR,
    EXIT_FAILED,
    BoundCommand,
    CountCommand,
    SearchCommand,
    VerifyCommand,
    exit_code_for,
)
from kcolored.domain.entities import EdgeColoring
from kcolored.domain.errors import (
    GeneralPositionError,
    InstanceParseError,
    InvariantViolation,
    SizeGuardError,
)
from kcolored.domain.messages import InstanceFile


@pytest.fixture
def random_instance(make_instance):
    """n=6, k=2 instance carrying a random matching and random details"""
    points, chi, m, details = make_instance(6, 2, 12)
    return InstanceFile.from_domain(points, chi, m, details, seed=12)


def test_count_square(square, square_diagonals_split):
    """Test the two colorings of the square"""
    uniform = CountCommand().execute(InstanceFile.from_domain(square, EdgeColoring.uniform(4, 1)))
    assert (uniform.crossings, uniform.monochromatic) == (1, 1)
    split = CountCommand().execute(InstanceFile.from_domain(square, square_diagonals_split))
    assert (split.crossings, split.monochromatic) == (1, 0)


def test_count_rejects_collinear_points():
    instance = InstanceFile(k=1, n=3, points=[(0, 0), (1, 1), (2, 2)], colors=[1, 1, 1])
    with pytest.raises(GeneralPositionError):
        CountCommand().execute(instance)


def test_search_removes_all_crossings_with_enough_colors():
    instance = SearchCommand().execute(6, 15, SearchPresets.quick(seed=2))
    assert CountCommand().execute(instance).monochromatic == 0
    assert instance.seed == 2


def test_search_is_deterministic():
    first = SearchCommand().execute(10, 2, SearchPresets.quick(seed=4))
    second = SearchCommand().execute(10, 2, SearchPresets.quick(seed=4))
    assert first == second


def test_search_history_is_recorded():
    command = SearchCommand()
    instance = command.execute(9, 2, SearchPresets.quick(seed=1), convex=True)
    assert command.history == sorted(command.history, reverse=True)
    assert CountCommand().execute(instance).monochromatic == command.history[-1]


def test_search_policies():
    with pytest.raises(ValueError):
        SearchCommand().execute(2, 1)
    with pytest.raises(ValueError):
        SearchCommand().execute(5, 0)


def test_bound_report_contents(random_instance):
    report = BoundCommand().execute(random_instance)
    assert report.matching_source == "optimal"
    assert report.bound == 24 * report.alpha / 6**4
    assert report.book_bound == book_bound(2)
    assert report.lower_bound == lower_bound(2)
    assert report.lower_gate_ok
    assert report.rectilinear_gate_ok is None
    assert report.improvement_factor == report.book_bound / report.bound
    assert report.beats_book_bound == (report.bound < report.book_bound)
    assert report.alpha + report.beta + report.gamma + report.delta == report.monochromatic
    assert len(report.details) == 6


def test_optimal_bound_never_worse_than_given(random_instance):
    given = BoundCommand().execute(random_instance, use_given_matching=True)
    optimal = BoundCommand().execute(random_instance)
    assert given.matching_source == "given"
    assert given.matching == random_instance.matching
    assert optimal.bound <= given.bound


def test_bound_with_sampled_comparison(random_instance):
    report = BoundCommand().execute(random_instance, compare_samples=10, seed=0)
    assert report.sampled_best_bound is not None
    assert report.sampled_best_bound >= report.bound


def test_bound_rectilinear_gate_for_one_color(make_instance):
    points, chi, _, _ = make_instance(7, 1, 3)
    report = BoundCommand().execute(InstanceFile.from_domain(points, chi))
    assert report.rectilinear_gate_ok is True
    assert report.bound >= Fraction(37997, 100000)


def test_bound_needs_given_matching(square, square_diagonals_split):
    instance = InstanceFile.from_domain(square, square_diagonals_split)
    with pytest.raises(ValueError):
        BoundCommand().execute(instance, use_given_matching=True)
    with pytest.raises(ValueError):
        BoundCommand().execute(instance, compare_samples=-1)


def test_verify_passes(random_instance):
    report = VerifyCommand().execute(random_instance, t_max=2)
    assert [step.t for step in report.steps] == [0, 1, 2]
    assert all(step.passed for step in report.steps)
    assert report.coefficients_match
    assert report.fit_prediction == report.formula_t4
    assert report.passed


@pytest.mark.parametrize("seed", range(20))
def test_verify_random_instances(make_instance, seed):
    """Test the formula against the construction on small random instances"""
    n, k = 4 + seed % 3, 1 + (seed // 3) % 3
    points, chi, m, details = make_instance(n, k, 100 + seed)
    report = VerifyCommand().execute(InstanceFile.from_domain(points, chi, m, details), t_max=2)
    assert report.passed


def test_verify_generates_missing_matching(square, square_diagonals_split):
    instance = InstanceFile.from_domain(square, square_diagonals_split, seed=5)
    report = VerifyCommand().execute(instance, t_max=1)
    assert report.passed


def test_verify_detects_a_broken_formula(random_instance):
    """Test that an off-by-one count fails from the first doubling step on"""

    def off_by_one(points, chi, m, details, t):
        return theorem1_count(points, chi, m, details, t) + (1 if t else 0)

    report = VerifyCommand(formula=off_by_one).execute(random_instance, t_max=1)
    assert report.steps[0].passed
    assert not report.steps[1].passed
    assert report.steps[1].mismatch_class == "formula"
    assert set(report.steps[1].class_counts) == {"I", "IIa", "IIb", "III"}
    assert not report.coefficients_match
    assert not report.passed


def test_verify_broken_base_count(random_instance):
    def shifted(points, chi, m, details, t):
        return theorem1_count(points, chi, m, details, t) + 16**t

    report = VerifyCommand(formula=shifted).execute(random_instance, t_max=0)
    assert report.steps[0].mismatch_class == "formula"
    assert not report.passed


def test_verify_size_guards(make_instance, random_instance):
    points, chi, _, _ = make_instance(9, 1, 0)
    with pytest.raises(SizeGuardError):
        VerifyCommand().execute(InstanceFile.from_domain(points, chi), t_max=1)
    with pytest.raises(SizeGuardError):
        VerifyCommand().execute(random_instance, t_max=3)


def test_exit_codes():
    assert exit_code_for(InvariantViolation("bug")) == EXIT_FAILED
    assert exit_code_for(InstanceParseError("bad", line=3)) == EXIT_ERROR
    assert exit_code_for(ValueError("bad")) == EXIT_ERROR


def test_error_response_carries_location():
    command = CountCommand(run_id="run_err")
    response = command.create_error_response(InstanceParseError("bad color", line=7, field="colors"))
    assert response.exit_code == EXIT_ERROR
    assert response.details == {"run_id": "run_err", "line": 7, "field": "colors"}
    triple = command.create_error_response(GeneralPositionError("collinear", triple=(0, 1, 2)))
    assert triple.details["triple"] == (0, 1, 2)
