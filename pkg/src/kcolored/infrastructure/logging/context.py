"""Thread-local logging context (run_id, command, stage)"""
import threading
from contextlib import contextmanager

_FIELDS = ("run_id", "command", "stage")


class LoggingContext:
    """Thread-local storage for the fields stamped on every log record"""

    _thread_local = threading.local()

    @classmethod
    def set_run_id(cls, run_id: str):
        cls._thread_local.run_id = run_id

    @classmethod
    def get_run_id(cls) -> str | None:
        return getattr(cls._thread_local, "run_id", None)

    @classmethod
    def set_command(cls, command: str):
        cls._thread_local.command = command

    @classmethod
    def get_command(cls) -> str | None:
        return getattr(cls._thread_local, "command", None)

    @classmethod
    def set_stage(cls, stage: str):
        cls._thread_local.stage = stage

    @classmethod
    def get_stage(cls) -> str | None:
        return getattr(cls._thread_local, "stage", None)

    @classmethod
    def clear(cls):
        for field in _FIELDS:
            if hasattr(cls._thread_local, field):
                delattr(cls._thread_local, field)

    @classmethod
    def restore(cls, ctx: dict[str, str]):
        """Replace the current context with a snapshot taken by get_context"""
        cls.clear()
        for field in _FIELDS:
            if field in ctx:
                setattr(cls._thread_local, field, ctx[field])

    @classmethod
    def get_context(cls) -> dict[str, str]:
        """Current context with unset fields omitted"""
        return {field: value for field in _FIELDS if (value := getattr(cls._thread_local, field, None))}


@contextmanager
def logging_context(run_id: str | None = None, command: str | None = None, stage: str | None = None):
    """Set context fields for the duration of the block, then restore the previous ones"""
    previous = LoggingContext.get_context()
    try:
        if run_id:
            LoggingContext.set_run_id(run_id)
        if command:
            LoggingContext.set_command(command)
        if stage:
            LoggingContext.set_stage(stage)
        yield
    finally:
        LoggingContext.restore(previous)
