"""Light boughs are exactly the shares.

A light bough that has endpoints below and above an unmarked vertex on its strand is
cut into three runs by that vertex, so only the share-to-light direction is checked
for it.
"""

from typing import List, Optional

from src.features.diagrams import enumerate_diagrams, is_share, parse_diagram, wraps
from src.features.graphs import bough_report, intersection_graph

from ..context import Certificate
from .base import BaseCheck


class ShareDualityCheck(BaseCheck):
    def __init__(self, max_degree: int, strand_count: int = 2, cap: Optional[int] = None) -> None:
        self._max_degree = max_degree
        self._strand_count = strand_count
        self._cap = cap
        self.parameters = {"max_degree": max_degree, "strands": strand_count}

    @property
    def name(self) -> str:
        return "lemma-share"

    def cases(self) -> List[str]:
        found = []
        for degree in range(1, self._max_degree + 1):
            for diagram in enumerate_diagrams(degree, self._strand_count, cap=self._cap):
                graph = intersection_graph(diagram)
                if graph.is_tree() and graph.marked_vertices:
                    found.append(diagram.code)
        return found

    def run_case(self, case: str) -> Certificate:
        diagram = parse_diagram(case)
        graph = intersection_graph(diagram)
        mismatches = []
        wrapped = 0
        for vertex in graph.vertices:
            for bough in bough_report(graph, vertex).boughs:
                share = is_share(diagram, bough.vertices) is not None
                if share == bough.light:
                    continue
                if bough.light and wraps(diagram, vertex, bough.vertices):
                    wrapped += 1
                    continue
                mismatches.append({"vertex": vertex, "bough": sorted(bough.vertices), "light": bough.light, "share": share})
        return Certificate(case=case, passed=not mismatches, detail={"mismatches": mismatches, "wrapped": wrapped})
