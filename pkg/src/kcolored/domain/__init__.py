"""Domain layer - entities, errors, messages and ports"""
from .entities import (
    VALID_OFFSET_PAIRS,
    Details,
    EdgeColoring,
    Matching,
    OffsetPair,
    Point,
    PointSet,
    Segment,
    SideCounts,
    pair_index,
)
from .errors import (
    ConstructionError,
    GeneralPositionError,
    InstanceParseError,
    InvalidColoringError,
    InvalidDetailsError,
    InvalidMatchingError,
    InvariantViolation,
    KColoredError,
    SharedEndpointError,
    SizeGuardError,
)
from .messages import BoundReport, CountReport, ErrorResponse, InstanceFile, VerifyReport, VerifyStep
from .ports import InstanceRepositoryPort
from .types import CROSSING_CLASS_TYPE, FIRST_TARGET_TYPE, MATCHING_SOURCE_TYPE, SECOND_TARGET_TYPE, SIDE_TYPE

__all__ = [
    "VALID_OFFSET_PAIRS",
    "Details",
    "EdgeColoring",
    "Matching",
    "OffsetPair",
    "Point",
    "PointSet",
    "Segment",
    "SideCounts",
    "pair_index",
    "ConstructionError",
    "GeneralPositionError",
    "InstanceParseError",
    "InvalidColoringError",
    "InvalidDetailsError",
    "InvalidMatchingError",
    "InvariantViolation",
    "KColoredError",
    "SharedEndpointError",
    "SizeGuardError",
    "BoundReport",
    "CountReport",
    "ErrorResponse",
    "InstanceFile",
    "VerifyReport",
    "VerifyStep",
    "InstanceRepositoryPort",
    "CROSSING_CLASS_TYPE",
    "FIRST_TARGET_TYPE",
    "MATCHING_SOURCE_TYPE",
    "SECOND_TARGET_TYPE",
    "SIDE_TYPE",
]
