"""Generalized 4T combinations lie in the plain 4T span."""

from itertools import combinations
from typing import List, Optional, Tuple

from src.features.diagrams import enumerate_diagrams, is_share, parse_diagram
from src.features.relations import FOUR_TERM, BasisCache, RelationConfig, RelationSet, Ring, generalized_four_term

from ..context import Certificate
from .base import BaseCheck
from .common import BasisProvider

# (code, share chords, strand 1-based, slot)
ShareCase = Tuple[str, Tuple[str, ...], int, int]


class GeneralizedFourTermCheck(BaseCheck):
    def __init__(
        self,
        max_degree: int,
        max_share: int = 2,
        config: Optional[RelationConfig] = None,
        cache: Optional[BasisCache] = None,
    ) -> None:
        self._max_degree = max_degree
        self._max_share = max_share
        self._config = config or RelationConfig()
        self._bases = BasisProvider(RelationSet(frozenset({FOUR_TERM})), Ring.RATIONAL, self._config, cache)
        self._cases: List[ShareCase] = []
        self.parameters = {"max_degree": max_degree, "strands": 2, "max_share": max_share}

    @property
    def name(self) -> str:
        return "gen4t"

    def prepare(self) -> None:
        self._cases = []
        for degree in range(2, self._max_degree + 1):
            self._bases.get(degree, 2)
            for diagram in enumerate_diagrams(degree, 2, cap=self._config.diagram_cap):
                for size in range(1, min(self._max_share, degree - 1) + 1):
                    for chords in combinations(diagram.chords, size):
                        share = is_share(diagram, chords)
                        if share is None:
                            continue
                        for arc in share.arcs:
                            if arc.start > 0 and diagram.strands[arc.strand][arc.start - 1] not in share.chords:
                                self._cases.append((diagram.code, chords, arc.strand + 1, arc.start - 1))
        self.parameters["instances"] = len(self._cases)

    def cases(self) -> List[ShareCase]:
        return list(self._cases)

    def run_case(self, case: ShareCase) -> Certificate:
        code, chords, strand, slot = case
        diagram = parse_diagram(code)
        combination = generalized_four_term(diagram, is_share(diagram, chords), (strand, slot))
        reduced = self._bases.get(diagram.degree, 2).reduce(combination)
        return Certificate(
            case=f"{code} share={''.join(chords)} at {strand}:{slot}",
            passed=reduced.is_zero(),
            detail={"combination": combination.to_dict(), "reduced": reduced.to_dict()},
        )
