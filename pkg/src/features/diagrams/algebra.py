"""Product, coproduct, connected sum and strand reversal."""

from typing import List, Tuple

from src.core.exceptions import CapExceededException, SlotRangeException, StrandMismatchException

from .model import ChordDiagram


def _tagged(diagram: ChordDiagram, prefix: str) -> ChordDiagram:
    return diagram.relabel({chord: f"{prefix}{i}" for i, chord in enumerate(diagram.chords)})


def _check_strand(diagram: ChordDiagram, index: int) -> None:
    if not 1 <= index <= diagram.strand_count:
        raise SlotRangeException(f"strand {index} out of range 1..{diagram.strand_count}")


def product(lower: ChordDiagram, upper: ChordDiagram) -> ChordDiagram:
    """Stack `upper` on top of `lower`, strand by strand."""
    if lower.strand_count != upper.strand_count:
        raise StrandMismatchException(
            f"cannot stack {upper.strand_count} strands on {lower.strand_count} strands"
        )
    first = _tagged(lower, "p")
    second = _tagged(upper, "q")
    stacked = tuple(a + b for a, b in zip(first.strands, second.strands))
    return ChordDiagram(stacked).canonical()


def coproduct(diagram: ChordDiagram, cap: int = 1 << 16) -> List[Tuple[ChordDiagram, ChordDiagram]]:
    """One pair (D without J, D restricted to J) per chord subset J, subsets in bitmask order."""
    chords = diagram.chords
    size = 1 << len(chords)
    if size > cap:
        raise CapExceededException(f"coproduct of a degree {len(chords)} diagram", size, cap)

    pairs = []
    for mask in range(size):
        subset = {chord for i, chord in enumerate(chords) if mask >> i & 1}
        dropped = tuple(tuple(c for c in strand if c not in subset) for strand in diagram.strands)
        kept = tuple(tuple(c for c in strand if c in subset) for strand in diagram.strands)
        pairs.append((ChordDiagram(dropped).canonical(), ChordDiagram(kept).canonical()))
    return pairs


def connect_sum(knot: ChordDiagram, diagram: ChordDiagram, strand: int, slot: int) -> ChordDiagram:
    """Splice the single strand of `knot` into strand `strand` (1-based) of `diagram` at `slot`."""
    if knot.strand_count != 1:
        raise StrandMismatchException(f"connected sum needs a one-strand diagram, got {knot.strand_count}")
    _check_strand(diagram, strand)
    target = diagram.strands[strand - 1]
    if not 0 <= slot <= len(target):
        raise SlotRangeException(f"slot {slot} out of range 0..{len(target)} on strand {strand}")

    inserted = _tagged(knot, "p").strands[0]
    host = _tagged(diagram, "q")
    strands = list(host.strands)
    strands[strand - 1] = strands[strand - 1][:slot] + inserted + strands[strand - 1][slot:]
    return ChordDiagram(tuple(strands)).canonical()


def reverse_component(diagram: ChordDiagram, strand: int) -> ChordDiagram:
    _check_strand(diagram, strand)
    strands = list(diagram.strands)
    strands[strand - 1] = tuple(reversed(strands[strand - 1]))
    return ChordDiagram(tuple(strands))
