from .config import Settings
from .exceptions import *
from .logging import configure_logging, get_logger
from .utils import *

__all__ = [
    "Settings",
    "configure_logging",
    "get_logger",
    "atomic_write_json",
    "ensure_directory",
    "retry_on_exception",
    "validate_file_exists",
    "validate_non_negative",
    "validate_positive",
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
