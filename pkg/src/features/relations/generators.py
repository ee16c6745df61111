"""Relation families on the diagrams of one degree and strand count.

4T sign table. For adjacent endpoints x (slot j) and y (slot j+1) of different
chords X and Y on one strand, with y' the other endpoint of Y:

    +1  D                               x just below y
    -1  D with x and y swapped          x just above y
    -1  x moved to just above y'
    +1  x moved to just below y'

A chord Y is crossed at y by the first two terms and at y' by the last two.
"""

from collections import Counter
from typing import Iterable, List, Optional, Tuple

from src.core.exceptions import DiagramException, RelationException, SlotRangeException
from src.core.logging import get_logger
from src.features.diagrams import ChordDiagram, Share, enumerate_diagrams, reverse_component

from .model import ANTISYMMETRY, FOUR_TERM, ONE_TERM, LinearCombination, RelationSet

logger = get_logger("relations.generators")

Token = Tuple[str, int]
Rows = List[List[Token]]


def _tokens(diagram: ChordDiagram) -> Rows:
    """Endpoints as (chord, occurrence) so moves never depend on shifting indices."""
    seen: Counter = Counter()
    rows: Rows = []
    for strand in diagram.strands:
        row = []
        for chord in strand:
            row.append((chord, seen[chord]))
            seen[chord] += 1
        rows.append(row)
    return rows


def _diagram(rows: Rows) -> ChordDiagram:
    return ChordDiagram(tuple(tuple(chord for chord, _ in row) for row in rows))


def _locate(rows: Rows, token: Token) -> Tuple[int, int]:
    for s, row in enumerate(rows):
        if token in row:
            return s, row.index(token)
    raise DiagramException(f"endpoint {token} not found")


def _moved(rows: Rows, token: Token, anchor: Token, above: bool) -> ChordDiagram:
    """Remove `token` and reinsert it just above or below `anchor`."""
    copy = [list(row) for row in rows]
    s, index = _locate(copy, token)
    copy[s].pop(index)
    s, index = _locate(copy, anchor)
    copy[s].insert(index + 1 if above else index, token)
    return _diagram(copy)


def _dedupe(relations: Iterable[LinearCombination]) -> List[LinearCombination]:
    unique = {}
    for relation in relations:
        if relation.is_zero():
            continue
        relation = relation.normalized()
        unique.setdefault(relation, None)
    return list(unique)


def isolated_chords(diagram: ChordDiagram) -> Tuple[str, ...]:
    """Chords whose endpoints are adjacent on one strand."""
    found = []
    for strand in diagram.strands:
        for left, right in zip(strand, strand[1:]):
            if left == right:
                found.append(left)
    return tuple(found)


def gen_one_term(degree: int, strand_count: int, cap: Optional[int] = None) -> List[LinearCombination]:
    return _dedupe(
        LinearCombination.of(diagram)
        for diagram in enumerate_diagrams(degree, strand_count, cap=cap)
        if isolated_chords(diagram)
    )


def four_term_relation(diagram: ChordDiagram, strand: int, slot: int) -> LinearCombination:
    """4T combination moving the endpoint at `slot` of `strand` (1-based) across the one above it."""
    if not 1 <= strand <= diagram.strand_count:
        raise SlotRangeException(f"strand {strand} outside 1..{diagram.strand_count}")
    rows = _tokens(diagram)
    row = rows[strand - 1]
    if not 0 <= slot < len(row) - 1:
        raise SlotRangeException(f"slot {slot} has no endpoint above it on strand {strand}")
    moving, crossed = row[slot], row[slot + 1]
    if moving[0] == crossed[0]:
        raise DiagramException(f"endpoints at slots {slot}, {slot + 1} belong to the same chord {moving[0]}")
    partner = (crossed[0], 1 - crossed[1])
    swapped = [list(r) for r in rows]
    swapped[strand - 1][slot], swapped[strand - 1][slot + 1] = crossed, moving
    return LinearCombination.from_terms(
        [
            (1, diagram),
            (-1, _diagram(swapped)),
            (-1, _moved(rows, moving, partner, above=True)),
            (1, _moved(rows, moving, partner, above=False)),
        ]
    )


def four_term_relations(diagram: ChordDiagram) -> List[LinearCombination]:
    relations = []
    for s, strand in enumerate(diagram.strands, start=1):
        for slot in range(len(strand) - 1):
            if strand[slot] != strand[slot + 1]:
                relations.append(four_term_relation(diagram, s, slot))
    return relations


def gen_four_term(degree: int, strand_count: int, cap: Optional[int] = None) -> List[LinearCombination]:
    relations = []
    for diagram in enumerate_diagrams(degree, strand_count, cap=cap):
        relations.extend(four_term_relations(diagram))
    return _dedupe(relations)


def antisymmetry_sign(diagram: ChordDiagram, strand: int, mode: str = "parity") -> int:
    if mode == "plus":
        return 1
    if mode == "minus":
        return -1
    if mode == "parity":
        return -1 if len(diagram.strands[strand - 1]) % 2 else 1
    raise RelationException(f"unknown antisymmetry sign mode {mode!r}")


def gen_antisymmetry(
    degree: int, strand_count: int, mode: str = "parity", cap: Optional[int] = None
) -> List[LinearCombination]:
    relations = []
    for diagram in enumerate_diagrams(degree, strand_count, cap=cap):
        for strand in range(1, strand_count + 1):
            sign = antisymmetry_sign(diagram, strand, mode)
            relations.append(
                LinearCombination.of(reverse_component(diagram, strand)) - LinearCombination.of(diagram, sign)
            )
    return _dedupe(relations)


def generalized_four_term(diagram: ChordDiagram, share: Share, endpoint: Tuple[int, int]) -> LinearCombination:
    """Generalized 4T for a share and the chord endpoint sitting just below one of its arcs.

    `endpoint` is (strand 1-based, slot). With A the arc above the endpoint and B the other
    arc, the combination is  D(below A) - D(above A) - D(above B) + D(below B); a share on a
    single arc gives  D(below A) - D(above A).
    """
    strand, slot = endpoint
    if not 1 <= strand <= diagram.strand_count or not 0 <= slot < len(diagram.strands[strand - 1]):
        raise SlotRangeException(f"no endpoint at strand {strand}, slot {slot}")
    rows = _tokens(diagram)
    moving = rows[strand - 1][slot]
    if moving[0] in share.chords:
        raise DiagramException(f"chord {moving[0]} belongs to the share")
    above = [arc for arc in share.arcs if arc.strand == strand - 1 and arc.start == slot + 1]
    if not above:
        raise DiagramException(f"endpoint at strand {strand}, slot {slot} is not just below an arc of the share")
    first = above[0]
    first_top = rows[first.strand][first.stop - 1]
    terms = [(1, diagram), (-1, _moved(rows, moving, first_top, above=True))]
    others = [arc for arc in share.arcs if arc != first]
    if others:
        second = others[0]
        terms.append((-1, _moved(rows, moving, rows[second.strand][second.stop - 1], above=True)))
        terms.append((1, _moved(rows, moving, rows[second.strand][second.start], above=False)))
    return LinearCombination.from_terms(terms)


def generate_relations(
    degree: int,
    strand_count: int,
    relations: RelationSet,
    antisymmetry_mode: str = "parity",
    cap: Optional[int] = None,
) -> List[LinearCombination]:
    """Union of the selected families, duplicates dropped."""
    families: List[LinearCombination] = []
    if ONE_TERM in relations:
        families.extend(gen_one_term(degree, strand_count, cap))
    if FOUR_TERM in relations and degree >= 2:
        families.extend(gen_four_term(degree, strand_count, cap))
    if ANTISYMMETRY in relations:
        families.extend(gen_antisymmetry(degree, strand_count, antisymmetry_mode, cap))
    unique = _dedupe(families)
    logger.debug(
        "relations generated",
        extra={"context": {"degree": degree, "strands": strand_count, "relations": str(relations), "count": len(unique)}},
    )
    return unique
