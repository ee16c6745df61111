from typing import Optional

from src.core.exceptions import ReconstructionException
from src.core.logging import get_logger
from src.features.diagrams import ChordDiagram
from src.features.graphs import (
    IntersectionGraph,
    check_realizable,
    graphs_isomorphic,
    intersection_graph,
)

from .multi_strand import reconstruct_nstrand
from .two_strand import reconstruct_2strand

logger = get_logger("reconstruction.roundtrip")


def reconstruct(tree: IntersectionGraph, colors: int) -> ChordDiagram:
    """Three or more colors use stacking, fewer the trimmed construction.

    Trees the construction cannot place raise `InfeasibleTreeException`; no search is tried.
    """
    if colors >= 3:
        return reconstruct_nstrand(tree, colors)
    diagram = reconstruct_2strand(tree)
    if colors == 2:
        return diagram
    if diagram.strands[1]:
        raise ReconstructionException("single-strand tree placed chords on strand 2")
    return ChordDiagram(diagram.strands[:1])


def round_trip_check(tree: IntersectionGraph, colors: int, cap: Optional[int] = None) -> bool:
    """True iff Γ(reconstruct(tree)) ≅ tree; rejected or unplaceable trees raise."""
    report = check_realizable(tree, colors, cap=cap)
    if not report.accepted:
        raise ReconstructionException(f"tree rejected on {colors} colors")
    diagram = reconstruct(tree, colors)
    matched = graphs_isomorphic(intersection_graph(diagram), tree)
    logger.debug("round trip", extra={"context": {"colors": colors, "diagram": diagram.to_text(), "matched": matched}})
    return matched
