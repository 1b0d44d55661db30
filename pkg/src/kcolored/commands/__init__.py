"""Command layer: one class per CLI subcommand"""
from .base_command import EXIT_ERROR, EXIT_FAILED, EXIT_OK, BaseCommand, exit_code_for
from .bound_command import BoundCommand
from .count_command import CountCommand
from .search_command import SearchCommand
from .verify_command import MAX_VERIFY_POINTS, MAX_VERIFY_STEPS, VerifyCommand

__all__ = [
    "EXIT_ERROR",
    "EXIT_FAILED",
    "EXIT_OK",
    "BaseCommand",
    "exit_code_for",
    "BoundCommand",
    "CountCommand",
    "SearchCommand",
    "MAX_VERIFY_POINTS",
    "MAX_VERIFY_STEPS",
    "VerifyCommand",
]
