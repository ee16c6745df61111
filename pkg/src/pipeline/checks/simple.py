"""A share plus one chord: the generalized 4T relations, cut down by 1T, hold modulo 1T and 4T."""

from itertools import combinations
from typing import List, Optional

from src.features.diagrams import enumerate_diagrams, is_share, parse_diagram
from src.features.relations import (
    DEFAULT_RELATIONS,
    BasisCache,
    LinearCombination,
    RelationConfig,
    Ring,
    generalized_four_term,
    isolated_chords,
)

from ..context import Certificate
from .base import BaseCheck
from .common import BasisProvider
from .gen4t import ShareCase


def drop_isolated(combination: LinearCombination) -> LinearCombination:
    """Terms with an isolated chord vanish by 1T."""
    return LinearCombination(
        {code: value for code, value in combination.items() if not isolated_chords(parse_diagram(code))}
    )


class ShareChordCheck(BaseCheck):
    """Diagrams made of a share of at most `max_share` chords and a single further chord."""

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
        self._bases = BasisProvider(DEFAULT_RELATIONS, Ring.RATIONAL, self._config, cache)
        self._cases: List[ShareCase] = []
        self.parameters = {"max_degree": max_degree, "strands": 2, "max_share": max_share}

    @property
    def name(self) -> str:
        return "cor-simple"

    def prepare(self) -> None:
        self._cases = []
        for degree in range(2, min(self._max_degree, self._max_share + 1) + 1):
            self._bases.get(degree, 2)
            for diagram in enumerate_diagrams(degree, 2, cap=self._config.diagram_cap):
                for chords in combinations(diagram.chords, degree - 1):
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
        relation = drop_isolated(generalized_four_term(diagram, is_share(diagram, chords), (strand, slot)))
        reduced = self._bases.get(diagram.degree, 2).reduce(relation)
        return Certificate(
            case=f"{code} share={''.join(chords)} at {strand}:{slot}",
            passed=reduced.is_zero(),
            detail={"relation": relation.to_dict(), "reduced": reduced.to_dict()},
        )
