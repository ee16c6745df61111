"""Decide whether a colored tree is the intersection graph of a connected diagram."""

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, List, Optional, Tuple

from src.core.exceptions import RealizabilityException
from src.core.logging import get_logger
from src.features.diagrams import ChordDiagram

from .conditions import BaseCondition, Violation, build_default_conditions
from .model import IntersectionGraph, MarkedTree
from .oracle import brute_force_realizable

logger = get_logger("graphs.realizability")

ACCEPTED = "accepted"
REJECTED = "rejected"


@dataclass(frozen=True)
class RealizabilityReport:
    verdict: str
    relabeling: Optional[Tuple[int, ...]] = None
    violations: Tuple[Violation, ...] = field(default_factory=tuple)
    method: str = "conditions"
    witness: Optional[ChordDiagram] = None

    @property
    def accepted(self) -> bool:
        return self.verdict == ACCEPTED

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "method": self.method,
            "relabeling": list(self.relabeling) if self.relabeling else None,
            "violations": [
                {"condition": v.condition, "vertices": list(v.vertices), "detail": v.detail} for v in self.violations
            ],
            "witness": self.witness.to_text() if self.witness is not None else None,
        }


def apply_relabeling(tree: IntersectionGraph, relabeling: Tuple[int, ...]) -> IntersectionGraph:
    """Color i becomes relabeling[i-1]."""
    return tree.relabel_colors({i + 1: color for i, color in enumerate(relabeling)})


def _run(conditions: Iterable[BaseCondition], tree: IntersectionGraph, colors: int) -> List[Violation]:
    found: List[Violation] = []
    for condition in conditions:
        found.extend(condition.check(tree, colors))
    return found


def check_realizable(
    tree: IntersectionGraph,
    colors: int,
    conditions: Optional[List[BaseCondition]] = None,
    cap: Optional[int] = None,
) -> RealizabilityReport:
    """Search relabelings of 1..colors in lexicographic order for one passing every condition.

    Two colors or fewer go to the exhaustive oracle instead.
    """
    tree = MarkedTree.from_graph(tree)
    if tree.color_span > colors:
        raise RealizabilityException(f"tree uses color {tree.color_span} but only {colors} colors were given")

    if colors < 3:
        witness = brute_force_realizable(tree, colors, cap=cap)
        logger.info("realizability by search", extra={"context": {"colors": colors, "found": witness is not None}})
        if witness is None:
            return RealizabilityReport(REJECTED, method="brute-force")
        return RealizabilityReport(ACCEPTED, tuple(range(1, colors + 1)), method="brute-force", witness=witness)

    conditions = conditions if conditions is not None else build_default_conditions()
    fixed = [c for c in conditions if not c.depends_on_coloring]
    varying = [c for c in conditions if c.depends_on_coloring]

    identity = tuple(range(1, colors + 1))
    fixed_violations = _run(fixed, tree, colors)
    if fixed_violations:
        report = RealizabilityReport(
            REJECTED, violations=tuple(sorted(fixed_violations + _run(varying, tree, colors), key=lambda v: v.condition))
        )
        logger.info("tree rejected", extra={"context": {"conditions": sorted({v.condition for v in report.violations})}})
        return report

    for relabeling in permutations(identity):
        if not _run(varying, apply_relabeling(tree, relabeling), colors):
            return RealizabilityReport(ACCEPTED, relabeling)

    violations = sorted(_run(varying, tree, colors), key=lambda v: v.condition)
    return RealizabilityReport(REJECTED, violations=tuple(violations))
