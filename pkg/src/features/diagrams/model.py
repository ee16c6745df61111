"""Chord diagrams on string links.

A diagram on k strands stores, per strand, the chord ids of its endpoints listed
bottom to top along the strand's orientation. Every chord id occurs exactly twice.
Strand indices are 0-based internally; the text grammar and the CLI are 1-based.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Mapping, Tuple

from src.core.exceptions import DiagramException

ChordId = str
Endpoint = Tuple[int, int]
Label = Tuple[int, int]


def canonical_name(index: int) -> ChordId:
    """a, b, ..., z, then x26, x27, ... for large diagrams."""
    if index < 26:
        return chr(ord("a") + index)
    return f"x{index}"


@dataclass(frozen=True)
class ChordDiagram:
    strands: Tuple[Tuple[ChordId, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "strands", tuple(tuple(str(c) for c in strand) for strand in self.strands))
        if not self.strands:
            raise DiagramException("a diagram needs at least one strand")
        counts: Dict[ChordId, int] = {}
        for strand in self.strands:
            for chord in strand:
                counts[chord] = counts.get(chord, 0) + 1
        bad = sorted(chord for chord, times in counts.items() if times != 2)
        if bad:
            detail = ", ".join(f"{chord} appears {counts[chord]} time(s)" for chord in bad)
            raise DiagramException(f"every chord needs exactly two endpoints: {detail}")

    @classmethod
    def from_strands(cls, strands: Iterable[Iterable[ChordId]]) -> "ChordDiagram":
        return cls(tuple(tuple(strand) for strand in strands))

    @classmethod
    def empty(cls, strand_count: int) -> "ChordDiagram":
        return cls(tuple(() for _ in range(strand_count)))

    @property
    def strand_count(self) -> int:
        return len(self.strands)

    @property
    def degree(self) -> int:
        return sum(len(strand) for strand in self.strands) // 2

    @cached_property
    def chords(self) -> Tuple[ChordId, ...]:
        """Chord ids in first-appearance order (strand 1 bottom to top, then strand 2, ...)."""
        seen: Dict[ChordId, None] = {}
        for strand in self.strands:
            for chord in strand:
                seen.setdefault(chord, None)
        return tuple(seen)

    @cached_property
    def endpoints(self) -> Dict[ChordId, Tuple[Endpoint, Endpoint]]:
        found: Dict[ChordId, list] = {}
        for s, strand in enumerate(self.strands):
            for slot, chord in enumerate(strand):
                found.setdefault(chord, []).append((s, slot))
        return {chord: (ends[0], ends[1]) for chord, ends in found.items()}

    def label(self, chord: ChordId) -> Label:
        """1-based strand pair {i, j} with i <= j."""
        (s1, _), (s2, _) = self.endpoints[chord]
        return (s1 + 1, s2 + 1)

    def is_marked(self, chord: ChordId) -> bool:
        (s1, _), (s2, _) = self.endpoints[chord]
        return s1 != s2

    def relabel(self, mapping: Mapping[ChordId, ChordId]) -> "ChordDiagram":
        return ChordDiagram(tuple(tuple(mapping[c] for c in strand) for strand in self.strands))

    def canonical(self) -> "ChordDiagram":
        mapping = {chord: canonical_name(i) for i, chord in enumerate(self.chords)}
        return self.relabel(mapping)

    def to_text(self) -> str:
        body = "".join("[" + " ".join(strand) + "]" for strand in self.strands)
        return f"k={self.strand_count} {body}"

    @cached_property
    def code(self) -> str:
        return self.canonical().to_text()

    def order_counts(self) -> Dict[Tuple[ChordId, ChordId], int]:
        """Raw directed counts: pairs (endpoint of x, endpoint of y) on one strand with x's below y's."""
        counts: Dict[Tuple[ChordId, ChordId], int] = {}
        for strand in self.strands:
            seen: Dict[ChordId, int] = {}
            for chord in strand:
                for earlier, times in seen.items():
                    if earlier != chord:
                        counts[(earlier, chord)] = counts.get((earlier, chord), 0) + times
                seen[chord] = seen.get(chord, 0) + 1
        return counts

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Arc:
    """Contiguous slot interval [start, stop) on one strand."""

    strand: int
    start: int
    stop: int

    def __len__(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True)
class Share:
    chords: frozenset
    arcs: Tuple[Arc, ...]
