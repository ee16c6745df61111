"""Elementary moves on two-strand tree diagrams. Every move keeps Γ(D) up to isomorphism."""

from itertools import permutations
from typing import List, Optional, Sequence, Tuple

from src.core.exceptions import MoveConstraintException, TransformationException
from src.core.logging import get_logger
from src.features.diagrams import ChordDiagram
from src.features.graphs import graphs_isomorphic, intersection_graph, is_trimmed, select_trunk, trunks

from .boughs import BoughDecomposition, decompose

logger = get_logger("transformations.moves")


def _check_preserved(before: ChordDiagram, after: ChordDiagram, move: str) -> ChordDiagram:
    if not graphs_isomorphic(intersection_graph(before), intersection_graph(after)):
        raise MoveConstraintException(f"{move} would change the intersection graph")
    return after


def _check_order(decomposition: BoughDecomposition, perm: Sequence[int]) -> None:
    if sorted(perm) != list(range(len(decomposition.boughs))):
        raise MoveConstraintException(f"{list(perm)} is not a permutation of {len(decomposition.boughs)} boughs")


def permute_boughs(diagram: ChordDiagram, chord: str, perm: Sequence[int]) -> ChordDiagram:
    """Position i along `chord` receives the bough that sat at position perm[i].

    Each bough keeps its own runs, so a heavy bough is carried whole while the light ones
    pass it. Orders that would move an unmarked bough to the other strand, or split the
    marked boughs of a trunk, break a strand into pieces and are refused.
    """
    decomposition = decompose(diagram, chord)
    _check_order(decomposition, perm)
    if list(perm) == sorted(perm):
        return diagram
    moved = decomposition.arrange(perm)
    return _check_preserved(diagram, moved, f"permuting boughs along {chord}")


def legal_permutations(decomposition: BoughDecomposition) -> List[Tuple[int, ...]]:
    """Every reordering of the boughs that reads back as a two-strand diagram."""
    found = []
    identity = tuple(range(len(decomposition.boughs)))
    for perm in permutations(identity):
        if perm == identity:
            continue
        try:
            decomposition.arrange(perm)
        except MoveConstraintException:
            continue
        found.append(perm)
    return found


def slide_bough(diagram: ChordDiagram, chord: str, index: int) -> ChordDiagram:
    """Carry an unmarked light bough from one end of an unmarked chord to the other."""
    decomposition = decompose(diagram, chord)
    if diagram.is_marked(chord):
        raise MoveConstraintException(f"chord {chord} is marked; only unmarked chords carry slides")
    count = len(decomposition.boughs)
    if not 0 <= index < count:
        raise TransformationException(f"chord {chord} has no bough {index}")
    bough = decomposition.boughs[index]
    if not bough.light or bough.marked:
        raise MoveConstraintException(f"bough at {bough.neighbor} is not an unmarked light bough")
    if count < 2:
        raise MoveConstraintException(f"bough at {bough.neighbor} is alone on {chord}")
    rest = [i for i in range(count) if i != index]
    if index == 0:
        order = rest + [0]
    elif index == count - 1:
        order = [index] + rest
    else:
        raise MoveConstraintException(f"bough at {bough.neighbor} is not at an end of {chord}")
    moved = decomposition.arrange(order)
    return _check_preserved(diagram, moved, f"sliding {bough.neighbor} along {chord}")


def marked_trunk(diagram: ChordDiagram) -> str:
    graph = intersection_graph(diagram)
    if not graph.is_tree() or not is_trimmed(graph):
        raise TransformationException("intersection graph is not a trimmed tree")
    trunk = select_trunk(graph, marked_only=True)
    if trunk is None:
        raise TransformationException("no marked trunk to reflect across")
    return trunk


def reflect_marked(diagram: ChordDiagram, trunk: Optional[str] = None) -> ChordDiagram:
    """Flip the slant of every marked bough of a marked trunk.

    Each marked bough trades its runs on the two sides of the trunk; applying the move
    twice gives back the diagram.
    """
    if trunk is None:
        trunk = marked_trunk(diagram)
    decomposition = decompose(diagram, trunk)
    if not diagram.is_marked(trunk):
        raise MoveConstraintException(f"{trunk} is not a marked chord")
    if decomposition.heavy:
        raise MoveConstraintException(f"{trunk} is not a trunk")
    if not decomposition.marked:
        return diagram
    order = range(len(decomposition.boughs))
    reflected = decomposition.arrange(list(order), frozenset(decomposition.marked))
    logger.debug("reflected marked boughs", extra={"context": {"trunk": trunk, "from": diagram.code, "to": reflected.code}})
    return _check_preserved(diagram, reflected, f"reflecting marked boughs across {trunk}")


def marked_trunks(diagram: ChordDiagram) -> Tuple[str, ...]:
    graph = intersection_graph(diagram)
    if not graph.is_tree():
        return ()
    return tuple(v for v in trunks(graph) if graph.is_marked(v))
