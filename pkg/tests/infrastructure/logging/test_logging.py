"""Tests for logging infrastructure"""
import json
import logging

from kcolored.infrastructure.logging import (
    ContextFormatter,
    JSONFormatter,
    LoggingContext,
    VerboseDumpFilter,
    get_global_run_id,
    get_logger,
    get_run_logger,
    logging_context,
)


def _record(msg: str = "Test message") -> logging.LogRecord:
    return logging.LogRecord(
        name="test",
        level=logging.INFO,
        pathname="",
        lineno=0,
        msg=msg,
        args=(),
        exc_info=None,
    )


def test_get_logger():
    """Test basic logger creation"""
    logger = get_logger("test_logger")
    assert logger is not None
    assert logger.name == "test_logger"
    assert logger.level >= logging.DEBUG
    assert logger.propagate is False


def test_get_run_logger():
    """Test run-specific logger creation"""
    run_id = "test_run_123"
    logger, handler = get_run_logger(run_id)

    assert logger is not None
    assert logger.name == f"run.{run_id}"
    assert handler is not None
    assert get_run_logger(run_id)[0] is logger


def test_logging_context():
    """Test logging context management"""
    LoggingContext.clear()

    LoggingContext.set_run_id("test_run")
    LoggingContext.set_command("bound")
    LoggingContext.set_stage("matching")

    assert LoggingContext.get_run_id() == "test_run"
    assert LoggingContext.get_command() == "bound"
    assert LoggingContext.get_stage() == "matching"
    assert LoggingContext.get_context() == {"run_id": "test_run", "command": "bound", "stage": "matching"}
    LoggingContext.clear()


def test_logging_context_manager_restores_previous():
    """Test that nested contexts restore the outer values"""
    LoggingContext.clear()

    with logging_context(run_id="outer", command="verify"):
        with logging_context(stage="t=1"):
            assert LoggingContext.get_context() == {"run_id": "outer", "command": "verify", "stage": "t=1"}
        assert LoggingContext.get_stage() is None
        assert LoggingContext.get_run_id() == "outer"

    assert LoggingContext.get_run_id() is None


def test_context_formatter_stamps_fields():
    formatter = ContextFormatter()
    with logging_context(run_id="abc", command="count"):
        formatted = formatter.format(_record())
    assert "[run_id=abc]" in formatted
    assert "[command=count]" in formatted
    assert "[stage=-]" in formatted
    assert formatted.endswith("Test message")


def test_json_formatter_includes_event():
    """Test that structured events reach the JSON output"""
    record = _record("bound computed")
    record.event = {"stage": "bound", "n": 27}
    with logging_context(run_id="json_run"):
        data = json.loads(JSONFormatter().format(record))
    assert data["message"] == "bound computed"
    assert data["run_id"] == "json_run"
    assert data["event"] == {"stage": "bound", "n": 27}


def test_verbose_dump_filter():
    dump_filter = VerboseDumpFilter(max_length=10)
    assert dump_filter.filter(_record("short"))
    assert not dump_filter.filter(_record("x" * 11))


def test_global_run_id_is_stable():
    """Test the process run id is generated once"""
    run_id = get_global_run_id()
    assert run_id and run_id.isdigit()
    assert get_global_run_id() == run_id
