from .base import ChordToolkitException


class GraphException(ChordToolkitException):
    """Intersection graph errors."""


class TreeFormatException(GraphException):
    """Tree file could not be parsed."""


class NotATreeException(GraphException):
    """Input graph is not a tree."""


class RealizabilityException(GraphException):
    """Realizability query could not be answered."""
