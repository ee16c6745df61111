from .base import ChordToolkitException


class RelationException(ChordToolkitException):
    """Relation span errors."""


class RingMismatchException(RelationException):
    """Operands live over different coefficient rings."""


class DegreeMismatchException(RelationException):
    """Combination degree or strand count differs from the basis."""
