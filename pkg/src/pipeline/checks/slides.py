"""Sliding a light bough along an unmarked chord is invisible modulo 1T and 4T."""

from typing import List, Optional

from src.core.exceptions import TransformationException
from src.features.diagrams import enumerate_diagrams, parse_diagram
from src.features.graphs import intersection_graph, is_trimmed
from src.features.relations import DEFAULT_RELATIONS, BasisCache, RelationConfig, Ring
from src.features.transformations import decompose, slide_bough

from ..context import Certificate
from .base import BaseCheck
from .common import BasisProvider, difference


class SlideInvarianceCheck(BaseCheck):
    def __init__(
        self,
        max_degree: int,
        config: Optional[RelationConfig] = None,
        cache: Optional[BasisCache] = None,
    ) -> None:
        self._max_degree = max_degree
        self._config = config or RelationConfig()
        self._bases = BasisProvider(DEFAULT_RELATIONS, Ring.RATIONAL, self._config, cache)
        self._cases: List[str] = []
        self.parameters = {"max_degree": max_degree, "strands": 2}

    @property
    def name(self) -> str:
        return "lemma-endtoend"

    def prepare(self) -> None:
        self._cases = []
        for degree in range(2, self._max_degree + 1):
            self._bases.get(degree, 2)
            for diagram in enumerate_diagrams(degree, 2, cap=self._config.diagram_cap):
                if not all(diagram.strands):
                    continue
                graph = intersection_graph(diagram)
                if graph.is_tree() and is_trimmed(graph):
                    self._cases.append(diagram.code)

    def cases(self) -> List[str]:
        return list(self._cases)

    def run_case(self, case: str) -> Certificate:
        diagram = parse_diagram(case)
        basis = self._bases.get(diagram.degree, 2)
        slides = 0
        failures = {}
        for chord in diagram.chords:
            if diagram.is_marked(chord):
                continue
            last = len(decompose(diagram, chord).boughs) - 1
            for index in sorted({0, last}):
                try:
                    target = slide_bough(diagram, chord, index)
                except TransformationException:
                    continue
                slides += 1
                reduced = basis.reduce(difference(target.code, case))
                if not reduced.is_zero():
                    failures[target.code] = reduced.to_dict()
        return Certificate(case=case, passed=not failures, detail={"slides": slides, "failures": failures})
