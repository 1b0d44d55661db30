"""Formatters stamping the run context onto records"""
import json
import logging
from typing import Any

from colorlog import ColoredFormatter

from .context import LoggingContext

_CONTEXT_FMT = " [run_id=%(run_id)s] [command=%(command)s] [stage=%(stage)s]"


def _stamp(record: logging.LogRecord, include_context: bool):
    ctx = LoggingContext.get_context() if include_context else {}
    record.run_id = ctx.get("run_id", "-")
    record.command = ctx.get("command", "-")
    record.stage = ctx.get("stage", "-")


class ContextFormatter(logging.Formatter):
    """Plain-text formatter for log files"""

    def __init__(self, fmt: str | None = None, datefmt: str | None = None, include_context: bool = True):
        if fmt is None:
            fmt = "%(asctime)s [%(levelname)s] %(name)s"
            if include_context:
                fmt += _CONTEXT_FMT
            fmt += " - %(message)s"
        super().__init__(fmt=fmt, datefmt=datefmt)
        self.include_context = include_context

    def format(self, record: logging.LogRecord) -> str:
        _stamp(record, self.include_context)
        return super().format(record)


class JSONFormatter(logging.Formatter):
    """One JSON object per record, for machine consumption of long searches"""

    def format(self, record: logging.LogRecord) -> str:
        log_data: dict[str, Any] = {
            "timestamp": self.formatTime(record),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        log_data.update(LoggingContext.get_context())

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        event = getattr(record, "event", None)
        if isinstance(event, dict):
            log_data["event"] = event
        if hasattr(record, "extra_fields"):
            log_data.update(record.extra_fields)

        return json.dumps(log_data, ensure_ascii=False, default=str)


class ColoredContextFormatter(ColoredFormatter):
    """Console formatter with level colors"""

    def __init__(self, fmt: str | None = None, datefmt: str | None = None, include_context: bool = True):
        if fmt is None:
            fmt = "%(log_color)s%(asctime)s [%(levelname)s] %(name)s"
            if include_context:
                fmt += _CONTEXT_FMT
            fmt += " - %(message)s"

        super().__init__(
            fmt=fmt,
            datefmt=datefmt,
            log_colors={
                "DEBUG": "cyan",
                "INFO": "green",
                "WARNING": "yellow",
                "ERROR": "red",
                "CRITICAL": "bold_red",
            },
        )
        self.include_context = include_context

    def format(self, record: logging.LogRecord) -> str:
        _stamp(record, self.include_context)
        return super().format(record)
