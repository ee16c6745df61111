from functools import lru_cache
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

from src.core.exceptions import CapExceededException, DiagramException
from src.core.logging import get_logger
from src.core.utils import validate_non_negative, validate_positive

from .model import ChordDiagram, canonical_name

logger = get_logger("diagrams.enumeration")


def double_factorial(value: int) -> int:
    result = 1
    while value > 1:
        result *= value
        value -= 2
    return result


def diagram_count(degree: int, strand_count: int) -> int:
    """(2n-1)!! * C(2n+k-1, k-1): endpoint distributions times perfect matchings."""
    return double_factorial(2 * degree - 1) * comb(2 * degree + strand_count - 1, strand_count - 1)


def strand_distributions(total: int, strand_count: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of `total` into `strand_count` parts, lexicographic."""
    if strand_count == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in strand_distributions(total - first, strand_count - 1):
            yield (first,) + rest


def perfect_matchings(points: Sequence[int]) -> Iterator[List[Tuple[int, int]]]:
    items = list(points)
    if not items:
        yield []
        return
    first = items.pop(0)
    for i, partner in enumerate(items):
        for rest in perfect_matchings(items[:i] + items[i + 1:]):
            yield [(first, partner)] + rest


def diagrams_for_distribution(distribution: Sequence[int]) -> Iterator[ChordDiagram]:
    """All diagrams whose strands carry the given endpoint counts, chords named canonically."""
    total = sum(distribution)
    for matching in perfect_matchings(range(total)):
        slot_chord = [""] * total
        # lower points in increasing order = first-appearance order, so names come out canonical
        for index, (low, high) in enumerate(sorted(matching)):
            name = canonical_name(index)
            slot_chord[low] = name
            slot_chord[high] = name
        strands = []
        offset = 0
        for size in distribution:
            strands.append(tuple(slot_chord[offset:offset + size]))
            offset += size
        yield ChordDiagram(tuple(strands))


@lru_cache(maxsize=32)
def _enumerate(degree: int, strand_count: int) -> Tuple[ChordDiagram, ...]:
    seen = set()
    result = []
    for distribution in strand_distributions(2 * degree, strand_count):
        for diagram in diagrams_for_distribution(distribution):
            code = diagram.code
            if code not in seen:
                seen.add(code)
                result.append(diagram)
    logger.debug("enumerated %s diagrams of degree %s on %s strands", len(result), degree, strand_count)
    return tuple(result)


def enumerate_diagrams(degree: int, strand_count: int, cap: Optional[int] = None) -> List[ChordDiagram]:
    """One representative per canonical code, in distribution-then-matching order."""
    validate_non_negative("degree", degree, DiagramException)
    validate_positive("strand count", strand_count, DiagramException)
    expected = diagram_count(degree, strand_count)
    if cap is not None and expected > cap:
        raise CapExceededException(f"degree {degree} diagrams on {strand_count} strands", expected, cap)
    return list(_enumerate(degree, strand_count))
