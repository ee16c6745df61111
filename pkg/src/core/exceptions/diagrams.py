from .base import ChordToolkitException


class DiagramException(ChordToolkitException):
    """Invalid chord diagram or diagram operation."""


class DiagramParseException(DiagramException):
    """Diagram text does not match the grammar."""


class StrandMismatchException(DiagramException):
    """Operands have different strand counts."""


class SlotRangeException(DiagramException):
    """Strand index or insertion slot out of range."""
