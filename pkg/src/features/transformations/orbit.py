"""Closure of a tree diagram under elementary moves."""

from collections import deque
from dataclasses import dataclass
from typing import Iterator, List, Optional, Set, Tuple

from src.core.exceptions import CapExceededException, TransformationException
from src.core.logging import get_logger
from src.features.diagrams import ChordDiagram
from src.features.graphs import intersection_graph, is_trimmed

from .boughs import decompose
from .config import OrbitConfig
from .moves import legal_permutations, marked_trunks, permute_boughs, reflect_marked, slide_bough

logger = get_logger("transformations.orbit")


@dataclass(frozen=True)
class MoveRecord:
    source: str
    move: str
    target: str

    def __str__(self) -> str:
        return f"{self.source} --{self.move}--> {self.target}"


def neighbors(diagram: ChordDiagram, include_slides: bool = False) -> Iterator[Tuple[str, ChordDiagram]]:
    """(move description, result) for every legal single move out of `diagram`."""
    for chord in diagram.chords:
        decomposition = decompose(diagram, chord)
        for perm in legal_permutations(decomposition):
            try:
                yield f"permute {chord} {list(perm)}", permute_boughs(diagram, chord, perm)
            except TransformationException:
                continue
        if not include_slides or diagram.is_marked(chord):
            continue
        for index in sorted({0, len(decomposition.boughs) - 1}):
            try:
                moved = slide_bough(diagram, chord, index)
            except TransformationException:
                continue
            yield f"slide {decomposition.boughs[index].neighbor} along {chord}", moved
    for trunk in marked_trunks(diagram):
        try:
            yield f"reflect across {trunk}", reflect_marked(diagram, trunk)
        except TransformationException:
            continue


def orbit(
    diagram: ChordDiagram,
    config: Optional[OrbitConfig] = None,
    trace: Optional[List[MoveRecord]] = None,
) -> Set[str]:
    """Canonical codes reachable from `diagram` by elementary moves (breadth first)."""
    config = config or OrbitConfig()
    if diagram.strand_count != 2:
        raise TransformationException(f"orbit acts on two-strand diagrams, got {diagram.strand_count}")
    graph = intersection_graph(diagram)
    if not graph.is_tree() or not is_trimmed(graph):
        raise TransformationException("orbit needs a diagram whose intersection graph is a trimmed tree")

    start = diagram.canonical()
    seen: Set[str] = {start.code}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for move, result in neighbors(current, config.include_slides):
            result = result.canonical()
            if result.code in seen:
                continue
            seen.add(result.code)
            if len(seen) > config.orbit_cap:
                raise CapExceededException("orbit codes", len(seen), config.orbit_cap)
            if trace is not None:
                trace.append(MoveRecord(current.code, move, result.code))
            queue.append(result)
    logger.info("orbit closed", extra={"context": {"diagram": start.code, "size": len(seen)}})
    return seen
