from .algebra import connect_sum, coproduct, product, reverse_component
from .codec import canonical_code, parse_diagram, serialize
from .config import DiagramConfig, load_diagram_config
from .connectivity import CONNECTIVITY_MODES, chord_adjacency, is_connected
from .enumeration import (
    diagram_count,
    diagrams_for_distribution,
    double_factorial,
    enumerate_diagrams,
    perfect_matchings,
    strand_distributions,
)
from .model import Arc, ChordDiagram, ChordId, Endpoint, Label, Share, canonical_name
from .shares import endpoint_runs, is_share, wraps
from .stars import build_star

__all__ = [
    "Arc",
    "ChordDiagram",
    "ChordId",
    "Endpoint",
    "Label",
    "Share",
    "canonical_name",
    "parse_diagram",
    "serialize",
    "canonical_code",
    "DiagramConfig",
    "load_diagram_config",
    "enumerate_diagrams",
    "diagram_count",
    "diagrams_for_distribution",
    "double_factorial",
    "perfect_matchings",
    "strand_distributions",
    "product",
    "coproduct",
    "connect_sum",
    "reverse_component",
    "endpoint_runs",
    "is_share",
    "wraps",
    "CONNECTIVITY_MODES",
    "chord_adjacency",
    "is_connected",
    "build_star",
]
