"""Tree structure: boughs, trunks, semisymmetry and rooted canonical codes."""

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

import networkx as nx

from src.core.exceptions import GraphException, NotATreeException

from .model import DIRECTED, IntersectionGraph, VertexId, format_label


@dataclass(frozen=True)
class Bough:
    """Component of T minus the vertex it hangs from."""

    vertices: FrozenSet[VertexId]
    neighbor: VertexId
    marked: Tuple[VertexId, ...]
    light: bool

    @property
    def heavy(self) -> bool:
        return not self.light


@dataclass(frozen=True)
class BoughReport:
    vertex: VertexId
    boughs: Tuple[Bough, ...]

    @property
    def heavy(self) -> Tuple[Bough, ...]:
        return tuple(b for b in self.boughs if b.heavy)

    @property
    def is_trunk(self) -> bool:
        return not self.heavy


def _require_tree(graph: IntersectionGraph) -> None:
    if not graph.is_tree():
        raise NotATreeException("operation needs a tree")


def _require_vertex(graph: IntersectionGraph, vertex: VertexId) -> None:
    if vertex not in graph.labels:
        raise GraphException(f"unknown vertex {vertex}")


def is_semisymmetric(graph: IntersectionGraph) -> bool:
    """Unmarked vertices carry no directed edges."""
    for source, target in graph.directed:
        if not graph.is_marked(source) or not graph.is_marked(target):
            return False
    return True


def bough_report(graph: IntersectionGraph, vertex: VertexId) -> BoughReport:
    _require_tree(graph)
    _require_vertex(graph, vertex)
    rest = graph.support.copy()
    rest.remove_node(vertex)
    adjacent = set(graph.support.neighbors(vertex))
    boughs: List[Bough] = []
    for component in nx.connected_components(rest):
        members = frozenset(component)
        neighbor = next(v for v in sorted(members) if v in adjacent)
        marked = tuple(v for v in sorted(members) if graph.is_marked(v))
        light = not marked or (len(marked) == 1 and marked[0] == neighbor)
        boughs.append(Bough(members, neighbor, marked, light))
    boughs.sort(key=lambda b: b.neighbor)
    return BoughReport(vertex, tuple(boughs))


def trunks(graph: IntersectionGraph) -> Tuple[VertexId, ...]:
    _require_tree(graph)
    return tuple(v for v in graph.vertices if bough_report(graph, v).is_trunk)


def is_trimmed(graph: IntersectionGraph) -> bool:
    return bool(trunks(graph))


def _edge_tag(graph: IntersectionGraph, parent: VertexId, child: VertexId) -> str:
    if graph.edge_kind(parent, child) != DIRECTED:
        return "-"
    return ">" if (parent, child) in graph.directed else "<"


def rooted_code(graph: IntersectionGraph, root: VertexId, parent: Optional[VertexId] = None) -> str:
    """Canonical string of the tree rooted at `root`, equal for isomorphic rooted trees."""
    _require_vertex(graph, root)
    parts = []
    for child in graph.support.neighbors(root):
        if child == parent:
            continue
        parts.append(_edge_tag(graph, root, child) + rooted_code(graph, child, root))
    return "(" + format_label(graph.labels[root]) + "".join(sorted(parts)) + ")"


def children_in_order(graph: IntersectionGraph, vertex: VertexId, parent: Optional[VertexId]) -> List[VertexId]:
    """Children of `vertex` away from `parent`, sorted by rooted code then id."""
    children = [c for c in graph.support.neighbors(vertex) if c != parent]
    return sorted(children, key=lambda c: (rooted_code(graph, c, vertex), c))


def select_trunk(graph: IntersectionGraph, marked_only: bool = False) -> Optional[VertexId]:
    """Trunk with the smallest rooted code; ties broken by vertex id."""
    candidates = [v for v in trunks(graph) if graph.is_marked(v) or not marked_only]
    if not candidates:
        return None
    return min(candidates, key=lambda v: (rooted_code(graph, v), v))
