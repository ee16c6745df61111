class ChordToolkitException(Exception):
    """Base exception for chord toolkit errors."""


class CapExceededException(ChordToolkitException):
    """A configured resource guard would be exceeded."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        super().__init__(f"{what} needs {size} items, cap is {cap}")
        self.what = what
        self.size = size
        self.cap = cap
