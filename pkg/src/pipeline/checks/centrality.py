"""Stars commute with every diagram on two strands modulo 1T and 4T."""

from typing import List, Optional, Tuple

from src.features.diagrams import build_star, enumerate_diagrams, parse_diagram, product
from src.features.relations import DEFAULT_RELATIONS, BasisCache, LinearCombination, RelationConfig, Ring

from ..context import Certificate
from .base import BaseCheck
from .common import BasisProvider

StarCase = Tuple[int, int, str]


class CentralityCheck(BaseCheck):
    def __init__(
        self,
        max_leaves: int = 2,
        max_other: int = 2,
        max_total: int = 4,
        config: Optional[RelationConfig] = None,
        cache: Optional[BasisCache] = None,
    ) -> None:
        self._max_leaves = max_leaves
        self._max_other = max_other
        self._max_total = max_total
        self._config = config or RelationConfig()
        self._bases = BasisProvider(DEFAULT_RELATIONS, Ring.RATIONAL, self._config, cache)
        self._cases: List[StarCase] = []
        self.parameters = {"max_leaves": max_leaves, "max_other": max_other, "max_total": max_total}

    @property
    def name(self) -> str:
        return "centrality"

    def prepare(self) -> None:
        self._cases = []
        for leaves in range(self._max_leaves + 1):
            for p in range(leaves + 1):
                star_degree = leaves + 1
                for degree in range(1, self._max_other + 1):
                    if star_degree + degree > self._max_total:
                        continue
                    self._bases.get(star_degree + degree, 2)
                    for other in enumerate_diagrams(degree, 2, cap=self._config.diagram_cap):
                        self._cases.append((p, leaves - p, other.code))

    def cases(self) -> List[StarCase]:
        return list(self._cases)

    def run_case(self, case: StarCase) -> Certificate:
        p, q, code = case
        star = build_star(p, q)
        other = parse_diagram(code)
        basis = self._bases.get(star.degree + other.degree, 2)
        commutator = LinearCombination.of(product(star, other)) - LinearCombination.of(product(other, star))
        reduced = basis.reduce(commutator)
        return Certificate(
            case=f"J({p},{q}) * {code}",
            passed=reduced.is_zero(),
            detail={"star": star.code, "reduced": reduced.to_dict()},
        )
