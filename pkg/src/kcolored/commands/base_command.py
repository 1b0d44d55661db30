"""Base class for the pipeline commands"""
from abc import ABC, abstractmethod
from typing import Any
from uuid import uuid4

from kcolored.domain.errors import InstanceParseError, InvariantViolation, SizeGuardError
from kcolored.domain.messages import ErrorResponse
from kcolored.infrastructure.logging import get_logger, logging_context

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def exit_code_for(exc: BaseException) -> int:
    """1 for invariant violations, 2 for any other failure"""
    if isinstance(exc, InvariantViolation):
        return EXIT_FAILED
    return EXIT_ERROR


class BaseCommand(ABC):
    """Base class for count, search, bound and verify

    Each command owns a run id, a logger named after it and a set of policies
    (min/max limits or predicates) checked before expensive work starts.
    """

    def __init__(self, command_name: str, run_id: str | None = None):
        self.command_name = command_name
        self.run_id = run_id or str(uuid4())
        self.logger = get_logger(f"command.{command_name}")

        # Policies: command-specific limits (override in subclasses)
        self.policies: dict[str, Any] = {}

    def log_event(self, event_type: str, event_data: dict[str, Any]):
        """Log structured event with run context"""
        stage = event_data.get("stage", event_type)
        with logging_context(run_id=self.run_id, command=self.command_name, stage=stage):
            self.logger.info(
                f"[{event_type}] {event_data.get('message', '')}",
                extra={"event": event_data},
            )

    def validate_policy(self, policy_name: str, value: Any) -> bool:
        """Validate value against command policy"""
        if policy_name not in self.policies:
            return True  # No policy = allow

        policy = self.policies[policy_name]
        if isinstance(policy, dict):
            min_val = policy.get("min")
            max_val = policy.get("max")
            if min_val is not None and value < min_val:
                return False
            if max_val is not None and value > max_val:
                return False
        elif callable(policy):
            return policy(value)

        return True

    def require_policy(self, policy_name: str, value: Any):
        """Raise SizeGuardError when value violates the named policy"""
        if not self.validate_policy(policy_name, value):
            raise SizeGuardError(
                f"{self.command_name}: {policy_name}={value} violates policy {self.policies[policy_name]}"
            )

    def create_error_response(self, exc: BaseException) -> ErrorResponse:
        """Create standardized error response"""
        details: dict[str, Any] = {"run_id": self.run_id}
        if isinstance(exc, InstanceParseError):
            details.update(line=exc.line, field=exc.field)
        for attribute in ("triple", "vertex"):
            value = getattr(exc, attribute, None)
            if value is not None:
                details[attribute] = value
        return ErrorResponse(
            error_type=type(exc).__name__,
            message=str(exc),
            exit_code=exit_code_for(exc),
            details=details,
        )

    @abstractmethod
    def execute(self, *args: Any, **kwargs: Any) -> Any:
        """Run the command - must be implemented by subclasses"""
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name={self.command_name}, run_id={self.run_id[:8]}...)"
