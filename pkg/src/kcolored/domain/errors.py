"""Exception hierarchy for the crossing-bound pipeline"""


class KColoredError(Exception):
    """Base class for all errors raised by kcolored"""


class GeneralPositionError(KColoredError, ValueError):
    """Duplicate points or three collinear points"""

    def __init__(self, message: str, triple: tuple[int, ...] | None = None):
        super().__init__(message)
        self.triple = triple


class SharedEndpointError(KColoredError, ValueError):
    """Crossing test on two segments that share an endpoint"""


class InvalidColoringError(KColoredError, ValueError):
    """Coloring is not total or uses a color outside 1..k"""


class InvalidMatchingError(KColoredError, ValueError):
    """Matching has a fixed point or a 2-cycle"""

    def __init__(self, message: str, vertex: int | None = None):
        super().__init__(message)
        self.vertex = vertex


class InvalidDetailsError(KColoredError, ValueError):
    """Detail choice not admissible at its vertex"""

    def __init__(self, message: str, vertex: int | None = None):
        super().__init__(message)
        self.vertex = vertex


class InstanceParseError(KColoredError, ValueError):
    """Instance file could not be parsed"""

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field:
            location.append(f"field '{field}'")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")
        self.line = line
        self.field = field


class SizeGuardError(KColoredError, ValueError):
    """Requested explicit computation is beyond desk scale"""


class ConstructionError(KColoredError, RuntimeError):
    """Doubling construction could not find a stable epsilon"""


class InvariantViolation(KColoredError, RuntimeError):
    """A proven invariant failed; signals a bug or corrupted input"""
