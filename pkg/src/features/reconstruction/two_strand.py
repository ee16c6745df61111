"""Canonical diagram for a trimmed tree on two strands.

Unmarked children nest around the upper endpoint of their parent, innermost first in
rooted-code order. Marked neighbours of the trunk form one block that crosses the trunk.
"""

from typing import List, Optional, Tuple

from src.core.exceptions import InfeasibleTreeException, NotATreeException, ReconstructionException
from src.core.logging import get_logger
from src.features.diagrams import ChordDiagram
from src.features.graphs import (
    IntersectionGraph,
    children_in_order,
    graphs_isomorphic,
    intersection_graph,
    select_trunk,
)

logger = get_logger("reconstruction.two_strand")

Run = List[str]


def _hang(tree: IntersectionGraph, vertex: str, parent: Optional[str]) -> Tuple[Run, Run]:
    """(lower part, upper part) for an unmarked vertex and everything below it."""
    strand = tree.labels[vertex][0]
    children = children_in_order(tree, vertex, parent)
    for child in children:
        if tree.is_marked(child) or tree.labels[child][0] != strand:
            raise InfeasibleTreeException(
                f"vertex {child} hangs off unmarked {vertex} but is not an unmarked chord on strand {strand}"
            )
    return [vertex], _nest(tree, vertex, children)


def _nest(tree: IntersectionGraph, vertex: str, children: List[str]) -> Run:
    """`vertex` with its unmarked children nested around it, innermost first."""
    lows: List[Run] = []
    highs: List[Run] = []
    for child in children:
        low, high = _hang(tree, child, vertex)
        lows.append(low)
        highs.append(high)
    out: Run = []
    for low in reversed(lows):
        out.extend(low)
    out.append(vertex)
    for high in highs:
        out.extend(high)
    return out


def _split_children(tree: IntersectionGraph, vertex: str, parent: Optional[str]) -> Tuple[List[str], List[str], List[str]]:
    """Children of `vertex` by kind: marked, unmarked on strand 1, unmarked on strand 2."""
    marked, first, second = [], [], []
    for child in children_in_order(tree, vertex, parent):
        if tree.is_marked(child):
            marked.append(child)
        elif tree.labels[child] == (1, 1):
            first.append(child)
        else:
            second.append(child)
    return marked, first, second


def _marked_arcs(tree: IntersectionGraph, vertex: str, parent: str) -> Tuple[Run, Run]:
    marked, first, second = _split_children(tree, vertex, parent)
    if marked:
        raise InfeasibleTreeException(f"marked vertices {marked} are not adjacent to the trunk")
    return _nest(tree, vertex, first), _nest(tree, vertex, second)


def check_two_strand(tree: IntersectionGraph) -> str:
    """Feasibility scan; returns the trunk."""
    if not tree.is_tree():
        raise NotATreeException("reconstruction needs a tree")
    if tree.directed:
        raise InfeasibleTreeException("two-strand trees carry no directed edges")
    outside = sorted(v for v in tree.vertices if tree.labels[v][1] > 2)
    if outside:
        raise InfeasibleTreeException(f"vertices {outside} use colors beyond 2")
    trunk = select_trunk(tree)
    if trunk is None:
        raise InfeasibleTreeException("tree is not trimmed")
    return trunk


def reconstruct_2strand(tree: IntersectionGraph) -> ChordDiagram:
    trunk = check_two_strand(tree)
    marked, first, second = _split_children(tree, trunk, None)
    block = [_marked_arcs(tree, child, trunk) for child in marked]
    block_first = [c for arc, _ in block for c in arc]
    block_second = [c for _, arc in block for c in arc]

    if tree.is_marked(trunk):
        # strand-1 children straddle the trunk endpoint, so the block goes above their run
        strand_one = _nest(tree, trunk, first) + block_first
        strand_two = block_second + _nest(tree, trunk, second)
    else:
        strand = tree.labels[trunk][0]
        same, other = (first, second) if strand == 1 else (second, first)
        if other:
            raise InfeasibleTreeException(f"unmarked {other[0]} shares no strand with unmarked trunk {trunk}")
        crossing, far = (block_first, block_second) if strand == 1 else (block_second, block_first)
        own = [trunk] + crossing + _nest(tree, trunk, same)
        strand_one, strand_two = (own, far) if strand == 1 else (far, own)

    diagram = ChordDiagram((tuple(strand_one), tuple(strand_two)))
    if not graphs_isomorphic(intersection_graph(diagram), tree):
        raise ReconstructionException(f"reconstruction of trunk {trunk} does not reproduce the tree")
    logger.debug("two-strand reconstruction", extra={"context": {"trunk": trunk, "diagram": diagram.to_text()}})
    return diagram
