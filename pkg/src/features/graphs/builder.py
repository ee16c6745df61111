from src.features.diagrams import ChordDiagram

from .model import IntersectionGraph


def intersection_graph(diagram: ChordDiagram) -> IntersectionGraph:
    """Vertex per chord; directed counts reduced mod 2; opposite surviving arrows merge."""
    counts = diagram.order_counts()
    chords = diagram.chords
    directed = set()
    undirected = set()
    for i, first in enumerate(chords):
        for second in chords[i + 1:]:
            forward = counts.get((first, second), 0) % 2
            backward = counts.get((second, first), 0) % 2
            if forward and backward:
                undirected.add(frozenset((first, second)))
            elif forward:
                directed.add((first, second))
            elif backward:
                directed.add((second, first))
    labels = {chord: diagram.label(chord) for chord in chords}
    return IntersectionGraph(labels, frozenset(directed), frozenset(undirected))
