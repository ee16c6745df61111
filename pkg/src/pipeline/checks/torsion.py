"""Invariant factors of the integral quotient and tree classes that split over Z."""

from typing import List, Optional, Tuple

from src.core.exceptions import RingMismatchException
from src.features.relations import (
    DEFAULT_RELATIONS,
    RelationConfig,
    RelationSet,
    Ring,
    element_order,
    lattice_invariants,
)

from ..context import Certificate
from .base import BaseCheck
from .common import BasisProvider, TreeClass, difference, tree_classes


class TorsionCheck(BaseCheck):
    """Certificates pass unless a class pair is equal over Q and not over Z.

    Such pairs are the finding; they are reported with their order, not hidden.
    """

    def __init__(
        self,
        degree: int,
        strand_count: int = 2,
        config: Optional[RelationConfig] = None,
        connectivity: str = "reduced",
        relations: RelationSet = DEFAULT_RELATIONS,
        ring: Ring = Ring.INTEGER,
    ) -> None:
        if ring is not Ring.INTEGER:
            raise RingMismatchException(f"torsion is measured over z, got ring {ring.value}")
        self._degree = degree
        self._strand_count = strand_count
        self._config = config or RelationConfig()
        self._connectivity = connectivity
        self._rational = BasisProvider(relations, Ring.RATIONAL, self._config)
        self._integer = BasisProvider(relations, ring, self._config)
        self._classes: List[TreeClass] = []
        self.parameters = {
            "degree": degree,
            "strands": strand_count,
            "relations": str(relations),
            "ring": ring.value,
        }

    @property
    def name(self) -> str:
        return "torsion"

    def prepare(self) -> None:
        integer = self._integer.get(self._degree, self._strand_count)
        self._rational.get(self._degree, self._strand_count)
        factors, residual = lattice_invariants(integer, self._config.torsion_column_cap)
        self.parameters.update({"factors": list(factors), "rank": integer.rank, "residual_columns": residual})
        self._classes = [
            case
            for case in tree_classes(self._degree, self._strand_count, False, self._connectivity, self._config.diagram_cap)
            if len(case[1]) > 1
        ]

    def cases(self) -> List[TreeClass]:
        return list(self._classes)

    def run_case(self, case: TreeClass) -> Certificate:
        degree, codes = case
        representative = codes[0]
        integer = self._integer.get(degree, self._strand_count)
        rational = self._rational.get(degree, self._strand_count)
        split: List[Tuple[str, Optional[int]]] = []
        for code in codes[1:]:
            order = element_order(difference(code, representative), integer, rational)
            if order is None or order > 1:
                split.append((code, order))
        return Certificate(
            case=f"n={degree} {representative}",
            passed=not split,
            detail={"pairs": [{"diagram": code, "order": order} for code, order in split]},
        )
