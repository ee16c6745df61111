"""Realizability conditions agree with exhaustive search, and accepted trees rebuild."""

from typing import Dict, List, Optional, Set, Tuple

from src.core.exceptions import ReconstructionException
from src.features.graphs import (
    MarkedTree,
    canonical_form,
    check_realizable,
    format_graph,
    labelled_trees,
    realized_forms,
)
from src.features.reconstruction import round_trip_check

from ..context import Certificate
from .base import BaseCheck


def describe(tree: MarkedTree) -> str:
    return "; ".join(format_graph(tree).strip().splitlines())


class TreeClassCheck(BaseCheck):
    """Trees up to `max_vertices` are compared with search; accepted trees up to `round_trip_vertices` are rebuilt."""

    def __init__(
        self,
        max_vertices: int,
        colors: int = 3,
        cap: Optional[int] = None,
        round_trip_vertices: Optional[int] = None,
    ) -> None:
        self._max_vertices = max_vertices
        self._colors = colors
        self._cap = cap
        self._round_trip_vertices = max(round_trip_vertices or max_vertices, max_vertices)
        self._trees: List[MarkedTree] = []
        self._realized: Dict[int, Set[Tuple]] = {}
        self.parameters = {
            "max_vertices": max_vertices,
            "colors": colors,
            "round_trip_vertices": self._round_trip_vertices,
        }

    @property
    def name(self) -> str:
        return "treeclass"

    def prepare(self) -> None:
        self._trees = []
        self._realized = {}
        for size in range(1, self._round_trip_vertices + 1):
            if size <= self._max_vertices:
                self._realized[size] = realized_forms(size, self._colors, cap=self._cap)
            self._trees.extend(labelled_trees(size, self._colors))
        self.parameters["trees"] = len(self._trees)

    def cases(self) -> List[MarkedTree]:
        return list(self._trees)

    def run_case(self, case: MarkedTree) -> Certificate:
        report = check_realizable(case, self._colors, cap=self._cap)
        detail = {"accepted": report.accepted, "report": report.to_dict()}
        passed = True
        if len(case) in self._realized:
            detail["realized"] = canonical_form(case) in self._realized[len(case)]
            passed = report.accepted == detail["realized"]
        if report.accepted:
            try:
                detail["round_trip"] = round_trip_check(case, self._colors, cap=self._cap)
            except ReconstructionException as exc:
                detail["round_trip"] = False
                detail["error"] = str(exc)
            passed = passed and detail["round_trip"]
        return Certificate(case=describe(case), passed=passed, detail=detail)
