from .base import ChordToolkitException


class BasisCacheException(ChordToolkitException):
    """Basis cache file unreadable or unwritable."""
