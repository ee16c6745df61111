"""Shared plumbing for the checks: Γ classes and relation bases."""

from typing import Dict, List, Optional, Tuple

from src.features.diagrams import enumerate_diagrams, is_connected, parse_diagram
from src.features.graphs import canonical_form, intersection_graph, is_trimmed
from src.features.relations import (
    BasisCache,
    LinearCombination,
    RelationBasis,
    RelationConfig,
    RelationSet,
    Ring,
    relation_basis,
)

TreeClass = Tuple[int, Tuple[str, ...]]


def tree_classes(
    degree: int,
    strand_count: int,
    trimmed: bool,
    connectivity: str = "reduced",
    cap: Optional[int] = None,
) -> List[TreeClass]:
    """Connected diagrams whose Γ is a (trimmed) tree, grouped by Γ up to isomorphism."""
    groups: Dict[Tuple, List[str]] = {}
    for diagram in enumerate_diagrams(degree, strand_count, cap=cap):
        if not is_connected(diagram, connectivity):
            continue
        graph = intersection_graph(diagram)
        if not graph.is_tree() or (trimmed and not is_trimmed(graph)):
            continue
        groups.setdefault(canonical_form(graph), []).append(diagram.code)
    return sorted((degree, tuple(sorted(codes))) for codes in groups.values())


class BasisProvider:
    """Bases per (degree, strands), built once and optionally cached on disk."""

    def __init__(
        self,
        relations: RelationSet,
        ring: Ring = Ring.RATIONAL,
        config: Optional[RelationConfig] = None,
        cache: Optional[BasisCache] = None,
    ) -> None:
        self.relations = relations
        self.ring = ring
        self.config = config or RelationConfig()
        self.cache = cache
        self._bases: Dict[Tuple[int, int], RelationBasis] = {}

    def get(self, degree: int, strand_count: int) -> RelationBasis:
        key = (degree, strand_count)
        if key not in self._bases:
            if self.cache is not None:
                self._bases[key] = self.cache.get_or_build(degree, strand_count, self.relations, self.ring, self.config)
            else:
                self._bases[key] = relation_basis(degree, strand_count, self.relations, self.ring, self.config)
        return self._bases[key]

    def __getstate__(self) -> Dict:
        # the disk cache stays in the parent process
        state = self.__dict__.copy()
        state["cache"] = None
        return state


def difference(first: str, second: str) -> LinearCombination:
    return LinearCombination.of(parse_diagram(first)) - LinearCombination.of(parse_diagram(second))
