"""Every Γ-class of tree diagrams collapses to one point modulo 1T and 4T."""

from typing import List, Optional

from src.features.relations import DEFAULT_RELATIONS, BasisCache, RelationConfig, Ring

from ..context import Certificate
from .base import BaseCheck
from .common import BasisProvider, TreeClass, difference, tree_classes


class ClassCollapseCheck(BaseCheck):
    def __init__(
        self,
        max_degree: int,
        strand_count: int,
        trimmed: bool,
        config: Optional[RelationConfig] = None,
        connectivity: str = "reduced",
        cache: Optional[BasisCache] = None,
        min_degree: int = 1,
    ) -> None:
        self._max_degree = max_degree
        self._min_degree = min_degree
        self._strand_count = strand_count
        self._trimmed = trimmed
        self._connectivity = connectivity
        self._config = config or RelationConfig()
        self._bases = BasisProvider(DEFAULT_RELATIONS, Ring.RATIONAL, self._config, cache)
        self._classes: List[TreeClass] = []
        self.parameters = {
            "max_degree": max_degree,
            "strands": strand_count,
            "trimmed": trimmed,
            "relations": str(DEFAULT_RELATIONS),
            "ring": Ring.RATIONAL.value,
            "connectivity": connectivity,
        }

    @property
    def name(self) -> str:
        return "thm-2comp" if self._strand_count == 2 else "thm-ncomp"

    def prepare(self) -> None:
        self._classes = []
        for degree in range(self._min_degree, self._max_degree + 1):
            classes = tree_classes(degree, self._strand_count, self._trimmed, self._connectivity, self._config.diagram_cap)
            if any(len(codes) > 1 for _, codes in classes):
                self._bases.get(degree, self._strand_count)
            self._classes.extend(classes)
        self.parameters["classes"] = len(self._classes)

    def cases(self) -> List[TreeClass]:
        return list(self._classes)

    def run_case(self, case: TreeClass) -> Certificate:
        degree, codes = case
        representative = codes[0]
        failures = {}
        if len(codes) > 1:
            basis = self._bases.get(degree, self._strand_count)
            for code in codes[1:]:
                reduced = basis.reduce(difference(code, representative))
                if not reduced.is_zero():
                    failures[code] = reduced.to_dict()
        return Certificate(
            case=f"n={degree} {representative}",
            passed=not failures,
            detail={"degree": degree, "representative": representative, "size": len(codes), "failures": failures},
        )
