"""Doubling construction configuration"""

from dataclasses import dataclass

# Explicit construction is exponential in the number of steps
MAX_EXPLICIT_STEPS = 3


@dataclass(frozen=True)
class DoublingConfig:
    """Epsilon stabilisation settings for the explicit doubling step"""

    max_halvings: int = 64
    stable_rounds: int = 2

    def __post_init__(self):
        if self.max_halvings < 1:
            raise ValueError(f"max_halvings must be >= 1, got {self.max_halvings}")
        if self.stable_rounds < 1:
            raise ValueError(f"stable_rounds must be >= 1, got {self.stable_rounds}")
        if self.stable_rounds >= self.max_halvings:
            raise ValueError(
                f"stable_rounds ({self.stable_rounds}) must be smaller than max_halvings ({self.max_halvings})"
            )
