"""Conditions invariant under relabeling of colors."""

from itertools import combinations
from typing import List

import networkx as nx

from ..analysis import is_semisymmetric
from ..model import DIRECTED, IntersectionGraph, format_label
from .base import BaseCondition, Violation


class SharedColorCondition(BaseCondition):
    @property
    def number(self) -> int:
        return 1

    @property
    def description(self) -> str:
        return "adjacent vertices share a color"

    def check(self, tree: IntersectionGraph, colors: int) -> List[Violation]:
        found = []
        for first, second in sorted(tree.support.edges()):
            if not set(tree.labels[first]) & set(tree.labels[second]):
                pair = sorted((first, second))
                found.append(self.violation(pair, f"{format_label(tree.labels[pair[0]])} and {format_label(tree.labels[pair[1]])} are disjoint"))
        return found


class SemisymmetryCondition(BaseCondition):
    @property
    def number(self) -> int:
        return 2

    @property
    def description(self) -> str:
        return "tree is semisymmetric"

    def check(self, tree: IntersectionGraph, colors: int) -> List[Violation]:
        if is_semisymmetric(tree):
            return []
        return [
            self.violation((source, target), "directed edge touches an unmarked vertex")
            for source, target in sorted(tree.directed)
            if not (tree.is_marked(source) and tree.is_marked(target))
        ]


class CrossingColorCondition(BaseCondition):
    @property
    def number(self) -> int:
        return 3

    @property
    def description(self) -> str:
        return "marked vertices sharing exactly one color are joined by a directed edge"

    def check(self, tree: IntersectionGraph, colors: int) -> List[Violation]:
        found = []
        for first, second in combinations(tree.marked_vertices, 2):
            common = set(tree.labels[first]) & set(tree.labels[second])
            if len(common) != 1:
                continue
            if tree.edge_kind(first, second) != DIRECTED:
                found.append(self.violation((first, second), f"share color {common.pop()} without a directed edge"))
        return found


class UndirectedPathCondition(BaseCondition):
    @property
    def number(self) -> int:
        return 6

    @property
    def description(self) -> str:
        return "no undirected path joins two marked vertices"

    def check(self, tree: IntersectionGraph, colors: int) -> List[Violation]:
        plain = nx.Graph()
        plain.add_nodes_from(tree.vertices)
        plain.add_edges_from(tuple(edge) for edge in tree.undirected)
        found = []
        for component in nx.connected_components(plain):
            marked = sorted(v for v in component if tree.is_marked(v))
            if len(marked) > 1:
                found.append(self.violation(marked, "marked vertices linked by undirected edges"))
        return found
