"""bound: certified upper bound 24 alpha / n^4 from an instance"""
import numpy as np

from kcolored.asymptotics import (
    RECTILINEAR_LOWER,
    book_bound,
    bound_from_alpha,
    check_bound_gates,
    coefficients,
    lower_bound,
    render_decimal,
)
from kcolored.coloring import count_crossings, count_monochromatic
from kcolored.domain.messages import BoundReport, InstanceFile
from kcolored.geometry import validate_general_position
from kcolored.matching import build_weights, optimal_matching, sample_matching_bounds, side_imbalance

from .base_command import BaseCommand


class BoundCommand(BaseCommand):
    def __init__(self, run_id: str | None = None):
        super().__init__("bound", run_id)
        self.policies = {"n": {"min": 3}, "compare_samples": {"min": 0}}

    def execute(
        self,
        instance: InstanceFile,
        use_given_matching: bool = False,
        compare_samples: int = 0,
        seed: int | None = None,
    ) -> BoundReport:
        """Bound from the optimal matching, or from the instance's own matching and details

        Raises InvariantViolation if the bound falls below a known lower bound.
        """
        if not self.validate_policy("n", instance.n):
            raise ValueError(f"A bound needs n >= 3, got {instance.n}")
        if not self.validate_policy("compare_samples", compare_samples):
            raise ValueError(f"compare_samples must be >= 0, got {compare_samples}")

        points = instance.point_set()
        chi = instance.edge_coloring()
        table = validate_general_position(points)
        weights = None

        if use_given_matching:
            matching = instance.given_matching()
            details = instance.given_details()
            if matching is None or details is None:
                raise ValueError("--use-given-matching needs an instance with matching and details")
            source = "given"
        else:
            weights = build_weights(points, chi, table)
            solution = optimal_matching(weights)
            matching, details = solution.matching, list(solution.details)
            source = "optimal"

        coeffs = coefficients(points, chi, matching, details)
        bound = bound_from_alpha(coeffs.alpha, instance.n)
        book = book_bound(instance.k)

        sampled_best = None
        if compare_samples:
            rng = np.random.default_rng(seed if seed is not None else (instance.seed or 0))
            weights = weights or build_weights(points, chi, table)
            sampled_best = min(sample_matching_bounds(points, chi, compare_samples, rng, weights))

        report = BoundReport(
            run_id=self.run_id,
            k=instance.k,
            n=instance.n,
            crossings=count_crossings(points, table),
            monochromatic=count_monochromatic(points, chi, table),
            alpha=coeffs.alpha,
            beta=coeffs.beta,
            gamma=coeffs.gamma,
            delta=coeffs.delta,
            alpha_decimal=render_decimal(coeffs.alpha),
            beta_decimal=render_decimal(coeffs.beta),
            gamma_decimal=render_decimal(coeffs.gamma),
            delta_decimal=render_decimal(coeffs.delta),
            bound=bound,
            bound_decimal=render_decimal(bound),
            book_bound=book,
            lower_bound=lower_bound(instance.k),
            improvement_factor=book / bound,
            beats_book_bound=bound < book,
            lower_gate_ok=bound >= lower_bound(instance.k),
            rectilinear_gate_ok=bound >= RECTILINEAR_LOWER if instance.k == 1 else None,
            matching_source=source,
            matching=list(matching.targets),
            details=[d.to_tuple() for d in details],
            side_imbalance=side_imbalance(points, chi, matching),
            sampled_best_bound=sampled_best,
        )
        self.log_event(
            "bound_computed",
            {
                "message": f"n={instance.n} k={instance.k} bound={report.bound_decimal} ({source} matching)",
                "stage": "bound",
            },
        )
        if not report.beats_book_bound:
            self.logger.warning(f"Bound {report.bound_decimal} does not beat the book bound {render_decimal(book)}")
        check_bound_gates(bound, instance.k)
        return report
