from .base import ChordToolkitException


class TransformationException(ChordToolkitException):
    """Elementary transformation errors."""


class MoveConstraintException(TransformationException):
    """Requested bough permutation breaks a move constraint."""
