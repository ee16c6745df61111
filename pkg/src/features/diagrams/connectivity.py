import networkx as nx

from src.core.exceptions import DiagramException
from src.core.logging import get_logger

from .model import ChordDiagram

logger = get_logger("diagrams.connectivity")

CONNECTIVITY_MODES = ("reduced", "raw")


def chord_adjacency(diagram: ChordDiagram, mode: str = "reduced") -> nx.Graph:
    """Undirected chord graph; `reduced` cancels counts mod 2, `raw` keeps any two-way overlap."""
    if mode not in CONNECTIVITY_MODES:
        raise DiagramException(f"unknown connectivity mode {mode!r}")
    counts = diagram.order_counts()
    graph = nx.Graph()
    graph.add_nodes_from(diagram.chords)
    for (first, second), forward in counts.items():
        backward = counts.get((second, first), 0)
        if mode == "reduced":
            linked = forward % 2 == 1 or backward % 2 == 1
        else:
            linked = forward > 0 and backward > 0
        if linked:
            graph.add_edge(first, second)
    return graph


def is_connected(diagram: ChordDiagram, mode: str = "reduced") -> bool:
    """Connected chord graph and every strand carries at least one endpoint."""
    if any(not strand for strand in diagram.strands):
        return False
    graph = chord_adjacency(diagram, mode)
    connected = nx.is_connected(graph)
    logger.debug("connectivity (%s) of %s: %s", mode, diagram.code, connected)
    return connected
