"""Logging infrastructure with run/command/stage context"""
from .context import LoggingContext, logging_context
from .formatters import ColoredContextFormatter, ContextFormatter, JSONFormatter
from .handlers import DailyRotatingFileHandler, RunSpecificFileHandler, VerboseDumpFilter
from .logger import get_global_run_id, get_logger, get_run_logger, setup_logging

__all__ = [
    "LoggingContext",
    "logging_context",
    "ContextFormatter",
    "ColoredContextFormatter",
    "JSONFormatter",
    "DailyRotatingFileHandler",
    "RunSpecificFileHandler",
    "VerboseDumpFilter",
    "get_logger",
    "get_run_logger",
    "get_global_run_id",
    "setup_logging",
]
