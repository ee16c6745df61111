from typing import Iterator

from src.core.exceptions import DiagramException
from src.core.utils import validate_non_negative

from .model import ChordDiagram


def _leaf_names() -> Iterator[str]:
    index = 0
    while True:
        name = chr(ord("b") + index) if index < 20 else f"s{index}"
        index += 1
        if name != "v":
            yield name


def build_star(strand_one: int, strand_two: int) -> ChordDiagram:
    """Marked chord v with nested unmarked chords crossing it on each strand, innermost nearest v."""
    validate_non_negative("strand one chords", strand_one, DiagramException)
    validate_non_negative("strand two chords", strand_two, DiagramException)
    names = _leaf_names()
    lower = [next(names) for _ in range(strand_one)]
    upper = [next(names) for _ in range(strand_two)]
    first = tuple(lower) + ("v",) + tuple(reversed(lower))
    second = tuple(upper) + ("v",) + tuple(reversed(upper))
    return ChordDiagram((first, second))
