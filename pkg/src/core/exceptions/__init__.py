from .base import CapExceededException, ChordToolkitException
from .cache import BasisCacheException
from .diagrams import (
    DiagramException,
    DiagramParseException,
    SlotRangeException,
    StrandMismatchException,
)
from .graphs import GraphException, NotATreeException, RealizabilityException, TreeFormatException
from .reconstruction import InfeasibleTreeException, ReconstructionException
from .relations import DegreeMismatchException, RelationException, RingMismatchException
from .transformations import MoveConstraintException, TransformationException

__all__ = [
    "ChordToolkitException",
    "CapExceededException",
    "BasisCacheException",
    "DiagramException",
    "DiagramParseException",
    "SlotRangeException",
    "StrandMismatchException",
    "GraphException",
    "NotATreeException",
    "RealizabilityException",
    "TreeFormatException",
    "ReconstructionException",
    "InfeasibleTreeException",
    "RelationException",
    "RingMismatchException",
    "DegreeMismatchException",
    "TransformationException",
    "MoveConstraintException",
]
