"""Two-strand diagrams read as one closed loop.

Strand 1 bottom to top, then strand 2 top to bottom, closed up. Two chords cross in
Γ(D) exactly when their endpoints interlace on the loop, and each endpoint remembers
which strand it came from, so a move only rearranges loop positions and the strands are
read back off the result.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.core.exceptions import MoveConstraintException, TransformationException
from src.features.diagrams import ChordDiagram


@dataclass(frozen=True)
class Token:
    chord: str
    strand: int


Run = Tuple[Token, ...]


def loop_tokens(diagram: ChordDiagram) -> List[Token]:
    if diagram.strand_count != 2:
        raise TransformationException(f"bough moves act on two strands, got {diagram.strand_count}")
    first, second = diagram.strands
    if not first or not second:
        raise TransformationException("bough moves need endpoints on both strands")
    return [Token(c, 0) for c in first] + [Token(c, 1) for c in reversed(second)]


def diagram_from_loop(tokens: Sequence[Token]) -> ChordDiagram:
    """Inverse of `loop_tokens` up to rotation; each strand must come back as one run."""
    size = len(tokens)
    starts = [i for i in range(size) if tokens[i].strand != tokens[i - 1].strand]
    if len(starts) != 2:
        raise MoveConstraintException("move would break a strand into pieces")
    start = next(i for i in starts if tokens[i].strand == 0)
    rotated = list(tokens[start:]) + list(tokens[:start])
    first = tuple(t.chord for t in rotated if t.strand == 0)
    second = tuple(t.chord for t in reversed(rotated) if t.strand == 1)
    return ChordDiagram((first, second))


def split_at(tokens: Sequence[Token], chord: str) -> Tuple[Token, Run, Token, Run]:
    """(first end, inner side, second end, outer side) of `chord` on the loop."""
    positions = [i for i, t in enumerate(tokens) if t.chord == chord]
    if len(positions) != 2:
        raise TransformationException(f"unknown chord {chord}")
    low, high = positions
    inner = tuple(tokens[low + 1:high])
    outer = tuple(tokens[high + 1:]) + tuple(tokens[:low])
    return tokens[low], inner, tokens[high], outer


def segments(side: Run, groups: Sequence[frozenset]) -> List[Tuple[int, Run]]:
    """(group index, contiguous run) in order along one side of a chord."""
    owner = {}
    for index, group in enumerate(groups):
        for chord in group:
            owner[chord] = index
    runs: List[Tuple[int, List[Token]]] = []
    for token in side:
        index = owner[token.chord]
        if runs and runs[-1][0] == index:
            runs[-1][1].append(token)
        else:
            runs.append((index, [token]))
    found = [index for index, _ in runs]
    if len(set(found)) != len(found):
        raise TransformationException("a bough is split along its chord; Γ is not a tree")
    return [(index, tuple(run)) for index, run in runs]


def assemble(first_end: Token, inner: Sequence[Run], second_end: Token, outer: Sequence[Run]) -> ChordDiagram:
    tokens: List[Token] = [first_end]
    for run in inner:
        tokens.extend(run)
    tokens.append(second_end)
    for run in outer:
        tokens.extend(run)
    return diagram_from_loop(tokens)
