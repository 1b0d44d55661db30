"""verify: explicit doubling against the crossing formula, and the coefficient fit"""
from collections.abc import Callable, Sequence
from fractions import Fraction

import numpy as np

from kcolored.asymptotics import coefficients, fit_coefficients, theorem1_count
from kcolored.coloring import count_monochromatic
from kcolored.doubling import (
    DoubledDrawing,
    crossing_type_counts,
    double_iterate,
    double_once,
    predicted_type_counts,
    random_details,
    random_matching,
)
from kcolored.domain.entities import Details, EdgeColoring, Matching, PointSet
from kcolored.domain.messages import InstanceFile, VerifyReport, VerifyStep
from kcolored.domain.types import CROSSING_CLASSES
from kcolored.geometry import validate_general_position

from .base_command import BaseCommand

CountFormula = Callable[[PointSet, EdgeColoring, Matching, Sequence[Details], int], int]

MAX_VERIFY_POINTS = 8
MAX_VERIFY_STEPS = 2
FIT_STEPS = 4


class VerifyCommand(BaseCommand):
    """Compares the explicit construction with `formula` for t = 0..t_max

    `formula` defaults to theorem1_count and is injectable so that a
    deliberately broken formula can be shown to fail.
    """

    def __init__(self, run_id: str | None = None, formula: CountFormula = theorem1_count):
        super().__init__("verify", run_id)
        self.formula = formula
        self.policies = {"n": {"min": 3, "max": MAX_VERIFY_POINTS}, "t_max": {"min": 0, "max": MAX_VERIFY_STEPS}}

    def _matching_and_details(
        self, instance: InstanceFile, chi: EdgeColoring, seed: int | None
    ) -> tuple[Matching, list[Details]]:
        matching = instance.given_matching()
        details = instance.given_details()
        rng = np.random.default_rng(seed if seed is not None else (instance.seed or 0))
        if matching is None:
            matching = random_matching(instance.n, rng)
            details = None
        if details is None:
            details = random_details(chi, matching, rng)
        return matching, details

    def _mismatch_class(
        self, points: PointSet, chi: EdgeColoring, matching: Matching, details: list[Details], t: int
    ) -> tuple[str, dict[str, int]]:
        """First crossing class whose count after step t disagrees with its one-step prediction"""
        if t == 0:
            return "formula", {}
        if t == 1:
            roots = tuple((v, 1) for v in range(len(points)))
            before = DoubledDrawing(points, chi, matching, roots, epsilon=Fraction(0), level=0)
        else:
            before = double_iterate(points, chi, matching, details, t - 1)
        level_points = before.points.scaled_to_integers()
        level_details = [details[v >> before.level] for v in range(len(level_points))]
        after = double_once(level_points, before.coloring, before.matching, level_details)
        observed = crossing_type_counts(before.matching, after)
        predicted = predicted_type_counts(level_points, before.coloring, before.matching)
        for name in CROSSING_CLASSES:
            if observed[name] != predicted[name]:
                return name, dict(observed)
        return "formula", dict(observed)

    def execute(self, instance: InstanceFile, t_max: int = MAX_VERIFY_STEPS, seed: int | None = None) -> VerifyReport:
        self.require_policy("n", instance.n)
        self.require_policy("t_max", t_max)

        points = instance.point_set()
        chi = instance.edge_coloring()
        table = validate_general_position(points)
        matching, details = self._matching_and_details(instance, chi, seed)

        steps = []
        for t in range(t_max + 1):
            if t == 0:
                explicit = count_monochromatic(points, chi, table)
            else:
                drawing = double_iterate(points, chi, matching, details, t)
                explicit = count_monochromatic(drawing.points, drawing.coloring)
            predicted = self.formula(points, chi, matching, details, t)
            step = VerifyStep(t=t, explicit=explicit, formula=predicted)
            if not step.passed:
                step.mismatch_class, step.class_counts = self._mismatch_class(points, chi, matching, details, t)
                self.logger.error(
                    f"t={t}: construction has {explicit} monochromatic crossings, formula gives {predicted} "
                    f"(class {step.mismatch_class})"
                )
            steps.append(step)

        values = [self.formula(points, chi, matching, details, t) for t in range(FIT_STEPS)]
        fitted = fit_coefficients(values)
        exact = coefficients(points, chi, matching, details)
        report = VerifyReport(
            run_id=self.run_id,
            k=instance.k,
            n=instance.n,
            steps=steps,
            fitted=fitted.as_tuple(),
            fit_prediction=fitted.evaluate(FIT_STEPS),
            formula_t4=self.formula(points, chi, matching, details, FIT_STEPS),
            coefficients_match=fitted == exact,
        )
        self.log_event(
            "verify_completed",
            {"message": f"n={instance.n} k={instance.k} t_max={t_max}: passed={report.passed}", "stage": "verify"},
        )
        return report
