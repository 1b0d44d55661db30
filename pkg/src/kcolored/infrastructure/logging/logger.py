"""Logger factory with daily, per-run and console output"""
import logging
import os
import time

from dotenv import load_dotenv

from .formatters import ColoredContextFormatter
from .handlers import DailyRotatingFileHandler, RunSpecificFileHandler, VerboseDumpFilter

load_dotenv()

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
LOG_DIR = os.getenv("LOG_DIR", "logs")
LOG_FILE_BASENAME = os.getenv("LOG_FILE_BASENAME", "kcolored.log")
LOG_ROTATION_TIME = os.getenv("LOG_ROTATION_TIME", "midnight")
LOG_BACKUP_COUNT = int(os.getenv("LOG_BACKUP_COUNT", 7))
LOG_RUN_DIR = os.getenv("LOG_RUN_DIR", "logs/runs")
LOG_TO_CONSOLE = os.getenv("LOG_TO_CONSOLE", "true").lower() == "true"
LOG_TO_FILE = os.getenv("LOG_TO_FILE", "true").lower() == "true"
LOG_FORMAT = os.getenv("LOG_FORMAT", "text").lower()

EXTERNAL_LIBRARIES = ["networkx", "matplotlib", "urllib3", "asyncio"]

_daily_handler: DailyRotatingFileHandler | None = None
_console_handler: logging.StreamHandler | None = None
_global_run_handler: RunSpecificFileHandler | None = None
_global_run_id: str | None = None
_initialized = False

_run_loggers: dict[str, tuple[logging.Logger, RunSpecificFileHandler]] = {}


def _level() -> int:
    return getattr(logging, LOG_LEVEL, logging.INFO)


def _shared_handlers() -> list[logging.Handler]:
    return [h for h in (_daily_handler, _global_run_handler, _console_handler) if h is not None]


def setup_logging():
    """Create the shared handlers and configure the root logger"""
    global _daily_handler, _console_handler, _global_run_handler, _global_run_id, _initialized

    if _global_run_id is None:
        _global_run_id = str(int(time.time() * 1000))

    json_format = LOG_FORMAT == "json"

    if LOG_TO_FILE:
        _daily_handler = DailyRotatingFileHandler(
            log_dir=LOG_DIR,
            log_basename=LOG_FILE_BASENAME,
            when=LOG_ROTATION_TIME,
            backup_count=LOG_BACKUP_COUNT,
            json_format=json_format,
        )
        _daily_handler.addFilter(VerboseDumpFilter())

        if _global_run_handler is None:
            _global_run_handler = RunSpecificFileHandler(
                log_dir=LOG_RUN_DIR, run_id=_global_run_id, json_format=json_format
            )
            _global_run_handler.addFilter(VerboseDumpFilter())
            _global_run_handler.setLevel(_level())

    if LOG_TO_CONSOLE:
        _console_handler = logging.StreamHandler()
        _console_handler.setFormatter(ColoredContextFormatter(include_context=True))
        _console_handler.addFilter(VerboseDumpFilter())

    root_logger = logging.getLogger()
    root_logger.handlers.clear()
    root_logger.setLevel(_level())
    for handler in (_daily_handler, _console_handler):
        if handler is not None:
            root_logger.addHandler(handler)

    for lib in EXTERNAL_LIBRARIES:
        lib_logger = logging.getLogger(lib)
        lib_logger.setLevel(logging.WARNING)
        lib_logger.propagate = False

    _initialized = True


def get_logger(name: str, level: int | None = None) -> logging.Logger:
    """
    Get a logger writing to the daily file, the global run file and the console.

    Args:
        name: Logger name (e.g. "kcolored.coloring" or "command.bound")
        level: log level (defaults to LOG_LEVEL from env)

    Returns:
        Configured logger
    """
    if not _initialized:
        setup_logging()

    logger = logging.getLogger(name)
    logger.handlers.clear()
    logger.setLevel(_level() if level is None else level)
    for handler in _shared_handlers():
        logger.addHandler(handler)
    logger.propagate = False
    return logger


def get_run_logger(run_id: str, level: int | None = None) -> tuple[logging.Logger, RunSpecificFileHandler]:
    """
    Get or create a logger with a dedicated file logs/runs/run_{run_id}.log.

    Args:
        run_id: Unique identifier of the run
        level: log level (defaults to LOG_LEVEL from env)

    Returns:
        Tuple of (logger, handler); the handler can be closed by the caller
    """
    if not _initialized:
        setup_logging()

    if run_id in _run_loggers:
        return _run_loggers[run_id]

    json_format = LOG_FORMAT == "json"
    run_handler = RunSpecificFileHandler(log_dir=LOG_RUN_DIR, run_id=run_id, json_format=json_format)

    logger = logging.getLogger(f"run.{run_id}")
    logger.setLevel(_level() if level is None else level)
    logger.addHandler(run_handler)
    for handler in _shared_handlers():
        logger.addHandler(handler)
    logger.propagate = False

    _run_loggers[run_id] = (logger, run_handler)
    return logger, run_handler


def get_global_run_id() -> str | None:
    """Run id generated when logging was initialised for this process"""
    if not _initialized:
        setup_logging()
    return _global_run_id


setup_logging()
