from .base import ChordToolkitException


class ReconstructionException(ChordToolkitException):
    """Tree could not be turned into a diagram."""


class InfeasibleTreeException(ReconstructionException):
    """Tree labels or shape admit no canonical placement."""
