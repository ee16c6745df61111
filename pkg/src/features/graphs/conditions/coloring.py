"""Conditions on how many marked vertices carry each color pair."""

from collections import Counter
from typing import List

from ..model import IntersectionGraph
from .base import BaseCondition, Violation


def marked_counts(tree: IntersectionGraph) -> Counter:
    return Counter(tree.labels[v] for v in tree.marked_vertices)


class AdjacentColorsCondition(BaseCondition):
    depends_on_coloring = True

    @property
    def number(self) -> int:
        return 4

    @property
    def description(self) -> str:
        return "marked labels join consecutive colors"

    def check(self, tree: IntersectionGraph, colors: int) -> List[Violation]:
        return [
            self.violation((v,), "label {%d,%d} skips a color" % tree.labels[v])
            for v in tree.marked_vertices
            if tree.labels[v][1] - tree.labels[v][0] > 1
        ]


class ChainCountCondition(BaseCondition):
    depends_on_coloring = True

    @property
    def number(self) -> int:
        return 5

    @property
    def description(self) -> str:
        return "one marked vertex per inner color pair, at least one at each end"

    def check(self, tree: IntersectionGraph, colors: int) -> List[Violation]:
        counts = marked_counts(tree)
        found = []
        for i in range(1, colors):
            label = (i, i + 1)
            have = counts.get(label, 0)
            holders = [v for v in tree.marked_vertices if tree.labels[v] == label]
            at_end = i in (1, colors - 1)
            if at_end and have < 1:
                found.append(self.violation(holders, "no marked vertex labelled {%d,%d}" % label))
            elif not at_end and have != 1:
                found.append(self.violation(holders, "%d marked vertices labelled {%d,%d}, need exactly 1" % ((have,) + label)))
        return found
