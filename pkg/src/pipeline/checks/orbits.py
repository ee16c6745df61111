"""Orbits under elementary moves coincide with Γ-classes of trimmed tree diagrams."""

from typing import List, Optional

from src.features.diagrams import parse_diagram
from src.features.transformations import OrbitConfig, orbit

from ..context import Certificate
from .base import BaseCheck
from .common import TreeClass, tree_classes


class OrbitClassCheck(BaseCheck):
    def __init__(
        self,
        max_degree: int,
        orbit_config: Optional[OrbitConfig] = None,
        connectivity: str = "reduced",
        cap: Optional[int] = None,
    ) -> None:
        self._max_degree = max_degree
        self._orbit_config = orbit_config or OrbitConfig()
        self._connectivity = connectivity
        self._cap = cap
        self.parameters = {"max_degree": max_degree, "strands": 2, "connectivity": connectivity}

    @property
    def name(self) -> str:
        return "prop-orbit"

    def cases(self) -> List[TreeClass]:
        found: List[TreeClass] = []
        for degree in range(1, self._max_degree + 1):
            found.extend(tree_classes(degree, 2, True, self._connectivity, self._cap))
        return found

    def run_case(self, case: TreeClass) -> Certificate:
        degree, codes = case
        reached = orbit(parse_diagram(codes[0]), self._orbit_config)
        expected = set(codes)
        return Certificate(
            case=f"n={degree} {codes[0]}",
            passed=reached == expected,
            detail={
                "class_size": len(expected),
                "orbit_size": len(reached),
                "missing": sorted(expected - reached),
                "extra": sorted(reached - expected),
            },
        )
