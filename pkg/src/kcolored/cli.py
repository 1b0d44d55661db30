"""Command-line interface: count, search, bound and verify"""

import argparse
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from kcolored.coloring import SearchConfig, SearchPresets
from kcolored.commands import (
    EXIT_ERROR,
    EXIT_FAILED,
    EXIT_OK,
    BoundCommand,
    CountCommand,
    SearchCommand,
    VerifyCommand,
    exit_code_for,
)
from kcolored.domain.errors import KColoredError
from kcolored.domain.messages import BoundReport, CountReport, VerifyReport
from kcolored.infrastructure.instances import FileInstanceRepository
from kcolored.infrastructure.logging import get_logger
from kcolored.infrastructure.registry import ReportsRepository

logger = get_logger("kcolored.cli")

PRESETS = {"quick": SearchPresets.quick, "desk": SearchPresets.desk, "thorough": SearchPresets.thorough}


def _get_rich():
    """Lazy import for rich (only used for rendering)"""
    from rich.console import Console
    from rich.table import Table

    return Console, Table


def _print_table(title: str, rows: list[tuple[str, str]]):
    console_cls, table_cls = _get_rich()
    table = table_cls(title=title)
    table.add_column("Field", style="cyan")
    table.add_column("Value", style="bold")
    for name, value in rows:
        table.add_row(name, value)
    console_cls().print(table)


def print_count_report(report: CountReport):
    _print_table(
        "Crossings",
        [
            ("n", str(report.n)),
            ("k", str(report.k)),
            ("crossings", str(report.crossings)),
            ("monochromatic", str(report.monochromatic)),
        ],
    )


def print_bound_report(report: BoundReport):
    data = report.model_dump(mode="json")
    rows = [("n", str(report.n)), ("k", str(report.k)), ("monochromatic", str(report.monochromatic))]
    for name in ("alpha", "beta", "gamma", "delta"):
        rows.append((name, f"{data[name]}  ({data[name + '_decimal']})"))
    rows += [
        ("bound", f"{data['bound']}  ({report.bound_decimal})"),
        ("book bound", data["book_bound"]),
        ("lower bound", data["lower_bound"]),
        ("matching", report.matching_source),
        ("side imbalance", data["side_imbalance"]),
    ]
    if report.sampled_best_bound is not None:
        rows.append(("best sampled bound", data["sampled_best_bound"]))
    _print_table("Bound", rows)
    print(f"   {'✅' if report.beats_book_bound else '⚠️'} beats book bound: {report.beats_book_bound}")
    print(f"   {'✅' if report.lower_gate_ok else '❌'} lower bound gate: {report.lower_gate_ok}")
    if report.rectilinear_gate_ok is not None:
        print(f"   {'✅' if report.rectilinear_gate_ok else '❌'} rectilinear gate: {report.rectilinear_gate_ok}")


def print_verify_report(report: VerifyReport):
    console_cls, table_cls = _get_rich()
    table = table_cls(title=f"Verification n={report.n} k={report.k}")
    for column in ("t", "explicit", "formula", "status"):
        table.add_column(column)
    for step in report.steps:
        status = "✅" if step.passed else f"❌ {step.mismatch_class}"
        table.add_row(str(step.t), str(step.explicit), str(step.formula), status)
    console_cls().print(table)
    print(f"   {'✅' if report.fit_passed else '❌'} coefficient fit predicts t=4: {report.fit_passed}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kcolored", description="Certified upper bounds on the geometric k-colored crossing constant"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="Count total and monochromatic crossings")
    count.add_argument("--instance", type=Path, required=True, help="Instance file")
    count.add_argument("--save-report", action="store_true", help="Store the report in the registry")

    search = sub.add_parser("search", help="Search for a drawing and coloring with few monochromatic crossings")
    search.add_argument("--n", type=int, required=True, help="Number of points")
    search.add_argument("--k", type=int, required=True, help="Number of colors")
    search.add_argument("--preset", choices=sorted(PRESETS), default=None, help="Search preset (default: desk)")
    search.add_argument("--seed", type=int, default=None, help="Random seed")
    search.add_argument("--restarts", type=int, default=None, help="Local search restarts per recoloring")
    search.add_argument("--max-rounds", type=int, default=None, help="Maximum alternation rounds")
    search.add_argument("--grid", type=int, default=None, help="Side of the grid for random initial points")
    search.add_argument("--convex", action="store_true", help="Start from points in convex position")
    search.add_argument("--out", type=Path, required=True, help="Output instance file")

    bound = sub.add_parser("bound", help="Certified bound 24 alpha / n^4")
    bound.add_argument("--instance", type=Path, required=True, help="Instance file")
    bound.add_argument(
        "--use-given-matching", action="store_true", help="Use the instance's matching and details"
    )
    bound.add_argument(
        "--compare-samples", type=int, default=0, help="Also report the best bound over N random matchings"
    )
    bound.add_argument("--seed", type=int, default=None, help="Seed for sampled matchings")
    bound.add_argument("--save-report", action="store_true", help="Store the report in the registry")

    verify = sub.add_parser("verify", help="Check the crossing formula against the explicit construction")
    verify.add_argument("--instance", type=Path, required=True, help="Instance file (n <= 8)")
    verify.add_argument("--t-max", type=int, default=2, help="Largest number of explicit doubling steps (<= 2)")
    verify.add_argument("--seed", type=int, default=None, help="Seed for matching and details when missing")
    verify.add_argument("--save-report", action="store_true", help="Store the report in the registry")

    return parser


def _search_config(args: argparse.Namespace) -> SearchConfig:
    cfg = PRESETS[args.preset or "desk"]()
    updates = {
        "rng_seed": args.seed,
        "restarts": args.restarts,
        "max_rounds": args.max_rounds,
        "grid_size": args.grid,
    }
    updates = {key: value for key, value in updates.items() if value is not None}
    # re-validate: model_copy skips validation
    return SearchConfig(**{**cfg.model_dump(), **updates})


def run(args: argparse.Namespace) -> int:
    repository = FileInstanceRepository()

    if args.command == "count":
        command = CountCommand()
        report = command.execute(repository.load(args.instance))
        print_count_report(report)
        if args.save_report:
            ReportsRepository().store("count", report)
        return EXIT_OK

    if args.command == "search":
        cfg = _search_config(args)
        print(f"🚀 Searching n={args.n} k={args.k} (seed={cfg.rng_seed}, restarts={cfg.restarts})...")
        instance = SearchCommand().execute(args.n, args.k, cfg, convex=args.convex)
        path = repository.save(instance, args.out)
        report = CountCommand().execute(instance)
        print(f"✅ {report.monochromatic} monochromatic crossings, instance written to {path}")
        return EXIT_OK

    if args.command == "bound":
        instance = repository.load(args.instance)
        report = BoundCommand().execute(
            instance,
            use_given_matching=args.use_given_matching,
            compare_samples=args.compare_samples,
            seed=args.seed,
        )
        print_bound_report(report)
        if args.save_report:
            ReportsRepository().store("bound", report)
        return EXIT_OK

    if args.command == "verify":
        instance = repository.load(args.instance)
        report = VerifyCommand().execute(instance, t_max=args.t_max, seed=args.seed)
        print_verify_report(report)
        if args.save_report:
            ReportsRepository().store("verify", report)
        if report.passed:
            print("✅ Verification passed")
            return EXIT_OK
        print("❌ Verification failed")
        return EXIT_FAILED

    raise ValueError(f"Unknown command {args.command}")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except KColoredError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        print(f"❌ {type(exc).__name__}: {exc}")
        return exit_code_for(exc)
    except (ValidationError, ValueError) as exc:
        logger.error(f"Invalid input: {exc}")
        print(f"❌ Invalid input: {exc}")
        return EXIT_ERROR
