"""File handlers for daily and per-run logs"""
import logging
import os
from logging.handlers import TimedRotatingFileHandler

from .formatters import ContextFormatter, JSONFormatter


def _formatter(json_format: bool) -> logging.Formatter:
    return JSONFormatter() if json_format else ContextFormatter(include_context=True)


class DailyRotatingFileHandler(TimedRotatingFileHandler):
    """Daily rotating log file shared by every command"""

    def __init__(
        self,
        log_dir: str,
        log_basename: str = "kcolored.log",
        when: str = "midnight",
        backup_count: int = 7,
        json_format: bool = False,
    ):
        os.makedirs(log_dir, exist_ok=True)
        super().__init__(
            filename=os.path.join(log_dir, log_basename),
            when=when,
            interval=1,
            backupCount=backup_count,
            encoding="utf-8",
            utc=False,
        )
        self.setFormatter(_formatter(json_format))


class RunSpecificFileHandler(logging.FileHandler):
    """One log file per execution: run_<run_id>.log"""

    def __init__(self, log_dir: str, run_id: str, json_format: bool = False):
        os.makedirs(log_dir, exist_ok=True)
        super().__init__(filename=os.path.join(log_dir, f"run_{run_id}.log"), encoding="utf-8", mode="w")
        self.setFormatter(_formatter(json_format))


class VerboseDumpFilter(logging.Filter):
    """Drop oversized messages such as accidental dumps of whole point sets or weight tables"""

    def __init__(self, max_length: int = 2000):
        super().__init__()
        self.max_length = max_length

    def filter(self, record: logging.LogRecord) -> bool:
        return len(record.getMessage()) <= self.max_length
