from typing import List

from .base import BaseCondition, Violation
from .coloring import AdjacentColorsCondition, ChainCountCondition, marked_counts
from .structure import (
    CrossingColorCondition,
    SemisymmetryCondition,
    SharedColorCondition,
    UndirectedPathCondition,
)


def build_default_conditions() -> List[BaseCondition]:
    return [
        SharedColorCondition(),
        SemisymmetryCondition(),
        CrossingColorCondition(),
        AdjacentColorsCondition(),
        ChainCountCondition(),
        UndirectedPathCondition(),
    ]


__all__ = [
    "BaseCondition",
    "Violation",
    "SharedColorCondition",
    "SemisymmetryCondition",
    "CrossingColorCondition",
    "AdjacentColorsCondition",
    "ChainCountCondition",
    "UndirectedPathCondition",
    "build_default_conditions",
    "marked_counts",
]
