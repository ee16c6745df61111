"""
src package for the chord diagram toolkit

Subpackages:
- core: settings, logging, exceptions, small file and validation helpers
- features.diagrams: chord diagrams on string links, enumeration, algebra
- features.graphs: intersection graphs, marked trees, realizability
- features.relations: 1T/4T quotients over Q and Z, basis cache, torsion
- features.transformations: bough moves and orbits
- features.reconstruction: diagrams from realizable trees
- pipeline: verification checks and their runner
"""

from .features.diagrams import ChordDiagram, parse_diagram
from .features.graphs import check_realizable, intersection_graph
from .features.reconstruction import reconstruct
from .features.relations import LinearCombination, equal_mod, relation_basis

__all__ = [
    "ChordDiagram",
    "parse_diagram",
    "intersection_graph",
    "check_realizable",
    "reconstruct",
    "LinearCombination",
    "equal_mod",
    "relation_basis",
]
