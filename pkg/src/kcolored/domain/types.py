"""Domain type definitions"""
from typing import Literal, TypeAlias

SIDE_TYPE: TypeAlias = Literal["left", "right"]
FIRST_TARGET_TYPE: TypeAlias = Literal["L", "R", "S"]
SECOND_TARGET_TYPE: TypeAlias = Literal["L", "R"]
CHILD_SLOT_TYPE: TypeAlias = Literal[1, 2]
CROSSING_CLASS_TYPE: TypeAlias = Literal["I", "IIa", "IIb", "III"]
MATCHING_SOURCE_TYPE: TypeAlias = Literal["optimal", "given"]

SIDES: tuple[SIDE_TYPE, SIDE_TYPE] = ("left", "right")
FIRST_TARGETS: tuple[FIRST_TARGET_TYPE, ...] = ("L", "R", "S")
SECOND_TARGETS: tuple[SECOND_TARGET_TYPE, ...] = ("L", "R")
CROSSING_CLASSES: tuple[CROSSING_CLASS_TYPE, ...] = ("I", "IIa", "IIb", "III")
