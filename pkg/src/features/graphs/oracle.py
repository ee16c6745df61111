"""Exhaustive search for a diagram realizing a given intersection graph."""

from collections import Counter
from typing import Optional, Set, Tuple

from src.core.exceptions import CapExceededException
from src.core.logging import get_logger
from src.features.diagrams import ChordDiagram, enumerate_diagrams

from .builder import intersection_graph
from .isomorphism import canonical_form, graphs_isomorphic
from .model import IntersectionGraph

logger = get_logger("graphs.oracle")


def brute_force_realizable(
    graph: IntersectionGraph,
    colors: int,
    max_degree: Optional[int] = None,
    cap: Optional[int] = None,
) -> Optional[ChordDiagram]:
    """First diagram (enumeration order) on `colors` strands, every strand used, with Γ ≅ graph."""
    size = len(graph)
    if max_degree is not None and size > max_degree:
        raise CapExceededException("brute-force tree vertices", size, max_degree)
    if graph.color_span > colors:
        return None
    wanted_labels = Counter(graph.labels.values())
    for diagram in enumerate_diagrams(size, colors, cap=cap):
        if any(not strand for strand in diagram.strands):
            continue
        if Counter(diagram.label(c) for c in diagram.chords) != wanted_labels:
            continue
        if graphs_isomorphic(intersection_graph(diagram), graph):
            logger.debug("witness found", extra={"context": {"diagram": diagram.to_text()}})
            return diagram
    return None


def realized_forms(size: int, colors: int, cap: Optional[int] = None) -> Set[Tuple]:
    """Canonical forms of every tree Γ realized by a degree-`size` diagram using all `colors` strands."""
    forms: Set[Tuple] = set()
    for diagram in enumerate_diagrams(size, colors, cap=cap):
        if any(not strand for strand in diagram.strands):
            continue
        graph = intersection_graph(diagram)
        if graph.is_tree():
            forms.add(canonical_form(graph))
    logger.debug("realized trees indexed", extra={"context": {"size": size, "colors": colors, "forms": len(forms)}})
    return forms
