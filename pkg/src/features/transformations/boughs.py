"""Boughs of a chord: components of Γ(D) minus the chord's vertex, read back as loop runs.

On a tree diagram every bough of a chord w takes one contiguous run of the loop on each
side of w, and the runs on the outer side come in the reverse order of the inner ones.
"""

from dataclasses import dataclass
from typing import FrozenSet, Sequence, Tuple

from src.core.exceptions import GraphException, TransformationException
from src.features.diagrams import ChordDiagram, is_share, wraps
from src.features.graphs import IntersectionGraph, bough_report, intersection_graph

from .loop import Run, Token, assemble, loop_tokens, segments, split_at


@dataclass(frozen=True)
class BoughInfo:
    chords: FrozenSet[str]
    neighbor: str
    light: bool
    marked: bool
    share: bool
    wraps: bool
    inner: Run
    outer: Run


@dataclass(frozen=True)
class BoughDecomposition:
    chord: str
    boughs: Tuple[BoughInfo, ...]
    graph: IntersectionGraph
    ends: Tuple[Token, Token]

    @property
    def heavy(self) -> Tuple[int, ...]:
        return tuple(i for i, bough in enumerate(self.boughs) if not bough.light)

    @property
    def marked(self) -> Tuple[int, ...]:
        return tuple(i for i, bough in enumerate(self.boughs) if bough.marked)

    def arrange(self, order: Sequence[int], swapped: FrozenSet[int] = frozenset()) -> ChordDiagram:
        """Boughs in `order` along the chord; swapped boughs trade their inner and outer runs."""
        inner = [self.boughs[i].outer if i in swapped else self.boughs[i].inner for i in order]
        outer = [self.boughs[i].inner if i in swapped else self.boughs[i].outer for i in reversed(order)]
        return assemble(self.ends[0], inner, self.ends[1], outer)


def decompose(diagram: ChordDiagram, chord: str) -> BoughDecomposition:
    """Boughs of `chord` in order along its inner side."""
    if chord not in diagram.endpoints:
        raise TransformationException(f"unknown chord {chord}")
    graph = intersection_graph(diagram)
    if not graph.is_tree():
        raise TransformationException("intersection graph is not a tree")
    try:
        report = bough_report(graph, chord)
    except GraphException as exc:
        raise TransformationException(str(exc)) from exc

    first_end, inner, second_end, outer = split_at(loop_tokens(diagram), chord)
    groups = [bough.vertices for bough in report.boughs]
    inner_runs = segments(inner, groups)
    outer_runs = segments(outer, groups)
    inner_order = [index for index, _ in inner_runs]
    if len(inner_order) != len(groups) or [index for index, _ in outer_runs] != inner_order[::-1]:
        raise TransformationException(f"boughs of {chord} do not nest along the loop")

    outer_by_group = dict(outer_runs)
    boughs = []
    for index, run in inner_runs:
        bough = report.boughs[index]
        boughs.append(
            BoughInfo(
                chords=bough.vertices,
                neighbor=bough.neighbor,
                light=bough.light,
                marked=bool(bough.marked),
                share=is_share(diagram, bough.vertices) is not None,
                wraps=wraps(diagram, chord, bough.vertices),
                inner=run,
                outer=outer_by_group[index],
            )
        )
    return BoughDecomposition(chord, tuple(boughs), graph, (first_end, second_end))
