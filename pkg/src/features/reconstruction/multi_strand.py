"""Reconstruction on three or more strands.

Removing directed edges leaves one component per marked vertex; each is a two-strand
trimmed tree on consecutive colors. Pieces are stacked on shared strands in a global
order that respects every directed edge between marked vertices.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx

from src.core.exceptions import ReconstructionException
from src.core.logging import get_logger
from src.features.diagrams import ChordDiagram
from src.features.graphs import (
    IntersectionGraph,
    apply_relabeling,
    check_realizable,
    graphs_isomorphic,
    intersection_graph,
)

from .two_strand import reconstruct_2strand

logger = get_logger("reconstruction.multi_strand")


@dataclass(frozen=True)
class Piece:
    marked: str
    low_color: int
    diagram: ChordDiagram


def _components(tree: IntersectionGraph) -> List[Tuple[str, ...]]:
    forest = tree.without_directed().support
    return [tuple(sorted(c)) for c in nx.connected_components(forest)]


def _piece(tree: IntersectionGraph, vertices: Tuple[str, ...]) -> Piece:
    marked = [v for v in vertices if tree.is_marked(v)]
    if len(marked) != 1:
        raise ReconstructionException(f"component {list(vertices)} holds {len(marked)} marked vertices, expected 1")
    low, high = tree.labels[marked[0]]
    local = {low: 1, high: 2}
    sub = tree.subgraph(vertices)
    local_tree = IntersectionGraph(
        {v: (local[i], local[j]) for v, (i, j) in sub.labels.items()},
        sub.directed,
        sub.undirected,
    )
    return Piece(marked[0], low, reconstruct_2strand(local_tree))


def stacking_order(tree: IntersectionGraph, pieces: List[Piece]) -> List[Piece]:
    """Topological order of pieces along directed edges; ties broken by piece code then id."""
    by_marked: Dict[str, Piece] = {piece.marked: piece for piece in pieces}
    order = nx.DiGraph()
    order.add_nodes_from(by_marked)
    for source, target in tree.directed:
        if source in by_marked and target in by_marked:
            order.add_edge(source, target)
    try:
        ranked = list(nx.lexicographical_topological_sort(order, key=lambda v: (by_marked[v].diagram.code, v)))
    except nx.NetworkXUnfeasible as exc:
        raise ReconstructionException("directed edges between marked vertices form a cycle") from exc
    return [by_marked[v] for v in ranked]


def reconstruct_nstrand(tree: IntersectionGraph, colors: int) -> ChordDiagram:
    report = check_realizable(tree, colors)
    if not report.accepted:
        conditions = sorted({v.condition for v in report.violations})
        raise ReconstructionException(f"tree is not realizable on {colors} strands (conditions {conditions})")
    relabeling = report.relabeling
    relabeled = apply_relabeling(tree, relabeling)

    pieces = [_piece(relabeled, component) for component in _components(relabeled)]
    strands: List[List[str]] = [[] for _ in range(colors)]
    for piece in stacking_order(relabeled, pieces):
        lower, upper = piece.diagram.strands
        strands[piece.low_color - 1].extend(lower)
        strands[piece.low_color].extend(upper)

    # strand of original color i is the one relabeled to relabeling[i-1]
    original = tuple(tuple(strands[relabeling[i] - 1]) for i in range(colors))
    diagram = ChordDiagram(original)
    if not graphs_isomorphic(intersection_graph(diagram), tree):
        raise ReconstructionException("stacked pieces do not reproduce the tree")
    logger.debug(
        "multi-strand reconstruction",
        extra={"context": {"colors": colors, "pieces": len(pieces), "diagram": diagram.to_text()}},
    )
    return diagram
