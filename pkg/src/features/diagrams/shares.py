from typing import Iterable, List, Optional

from src.core.exceptions import DiagramException

from .model import Arc, ChordDiagram, Share


def endpoint_runs(diagram: ChordDiagram, chords: Iterable[str]) -> List[Arc]:
    """Maximal contiguous intervals made only of endpoints of `chords`."""
    chosen = set(chords)
    runs: List[Arc] = []
    for s, strand in enumerate(diagram.strands):
        start = None
        for slot, chord in enumerate(strand):
            if chord in chosen:
                if start is None:
                    start = slot
            elif start is not None:
                runs.append(Arc(s, start, slot))
                start = None
        if start is not None:
            runs.append(Arc(s, start, len(strand)))
    return runs


def is_share(diagram: ChordDiagram, chords: Iterable[str]) -> Optional[Share]:
    """Witness arcs when the chords fill at most two contiguous intervals and nothing else does."""
    chosen = frozenset(chords)
    unknown = sorted(chosen.difference(diagram.chords))
    if unknown:
        raise DiagramException(f"unknown chord(s): {', '.join(unknown)}")
    runs = endpoint_runs(diagram, chosen)
    if len(runs) > 2:
        return None
    return Share(chords=chosen, arcs=tuple(runs))


def wraps(diagram: ChordDiagram, chord: str, chords: Iterable[str]) -> bool:
    """True when `chords` have endpoints on the strand of unmarked `chord` both below and above it."""
    if chord not in diagram.endpoints:
        raise DiagramException(f"unknown chord: {chord}")
    if diagram.is_marked(chord):
        return False
    (strand, low), (_, high) = sorted(diagram.endpoints[chord])
    slots = [slot for other in chords for s, slot in diagram.endpoints[other] if s == strand]
    return any(slot < low for slot in slots) and any(slot > high for slot in slots)
