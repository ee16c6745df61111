from pathlib import Path
from typing import Type

from src.core.exceptions import ChordToolkitException


def validate_file_exists(path: str, error: Type[ChordToolkitException] = ChordToolkitException) -> None:
    if not Path(path).exists():
        raise error(f"File not found: {path}")


def validate_positive(name: str, value: int, error: Type[ChordToolkitException] = ChordToolkitException) -> None:
    if value < 1:
        raise error(f"{name} must be >= 1, got {value}")


def validate_non_negative(name: str, value: int, error: Type[ChordToolkitException] = ChordToolkitException) -> None:
    if value < 0:
        raise error(f"{name} must be >= 0, got {value}")
