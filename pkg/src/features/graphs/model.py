"""Intersection graphs: vertices labelled by strand pairs, directed and undirected edges."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

import networkx as nx

from src.core.exceptions import GraphException, NotATreeException

VertexId = str
Label = Tuple[int, int]

UNDIRECTED = "undirected"
DIRECTED = "directed"


def normalize_label(first: int, second: int) -> Label:
    if first < 1 or second < 1:
        raise GraphException(f"colors are 1-based, got {{{first},{second}}}")
    return (min(first, second), max(first, second))


def format_label(label: Label) -> str:
    return "{%d,%d}" % label


@dataclass(frozen=True)
class IntersectionGraph:
    labels: Mapping[VertexId, Label]
    directed: FrozenSet[Tuple[VertexId, VertexId]] = field(default_factory=frozenset)
    undirected: FrozenSet[FrozenSet[VertexId]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", {v: normalize_label(*lab) for v, lab in dict(self.labels).items()})
        object.__setattr__(self, "directed", frozenset(tuple(edge) for edge in self.directed))
        object.__setattr__(self, "undirected", frozenset(frozenset(edge) for edge in self.undirected))

        seen_pairs = set()
        for edge in self.undirected:
            if len(edge) != 2:
                raise GraphException(f"undirected edge needs two distinct vertices: {sorted(edge)}")
            self._check_known(edge)
            seen_pairs.add(edge)
        for source, target in self.directed:
            if source == target:
                raise GraphException(f"self loop on {source}")
            self._check_known((source, target))
            pair = frozenset((source, target))
            if pair in seen_pairs:
                raise GraphException(f"vertices {source} and {target} carry more than one edge")
            seen_pairs.add(pair)

    def _check_known(self, vertices: Iterable[VertexId]) -> None:
        for vertex in vertices:
            if vertex not in self.labels:
                raise GraphException(f"edge refers to unknown vertex {vertex}")

    @property
    def vertices(self) -> Tuple[VertexId, ...]:
        return tuple(sorted(self.labels))

    def __len__(self) -> int:
        return len(self.labels)

    def is_marked(self, vertex: VertexId) -> bool:
        first, second = self.labels[vertex]
        return first != second

    @property
    def marked_vertices(self) -> Tuple[VertexId, ...]:
        return tuple(v for v in self.vertices if self.is_marked(v))

    @property
    def color_span(self) -> int:
        return max((lab[1] for lab in self.labels.values()), default=0)

    def edge_kind(self, first: VertexId, second: VertexId) -> Optional[str]:
        if frozenset((first, second)) in self.undirected:
            return UNDIRECTED
        if (first, second) in self.directed or (second, first) in self.directed:
            return DIRECTED
        return None

    @cached_property
    def support(self) -> nx.Graph:
        """All edges taken undirected."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(tuple(edge) for edge in self.undirected)
        graph.add_edges_from(self.directed)
        return graph

    def neighbors(self, vertex: VertexId) -> Tuple[VertexId, ...]:
        return tuple(sorted(self.support.neighbors(vertex)))

    def to_networkx(self) -> nx.DiGraph:
        """Undirected edges become arcs both ways tagged `undirected`."""
        graph = nx.DiGraph()
        for vertex in self.vertices:
            graph.add_node(vertex, label=self.labels[vertex])
        for source, target in self.directed:
            graph.add_edge(source, target, kind=DIRECTED)
        for edge in self.undirected:
            first, second = sorted(edge)
            graph.add_edge(first, second, kind=UNDIRECTED)
            graph.add_edge(second, first, kind=UNDIRECTED)
        return graph

    def is_tree(self) -> bool:
        return len(self) > 0 and nx.is_tree(self.support)

    def without_directed(self) -> "IntersectionGraph":
        return IntersectionGraph(self.labels, frozenset(), self.undirected)

    def subgraph(self, vertices: Iterable[VertexId]) -> "IntersectionGraph":
        keep = set(vertices)
        return IntersectionGraph(
            {v: lab for v, lab in self.labels.items() if v in keep},
            frozenset(e for e in self.directed if e[0] in keep and e[1] in keep),
            frozenset(e for e in self.undirected if e <= keep),
        )

    def relabel_colors(self, permutation: Mapping[int, int]) -> "IntersectionGraph":
        return IntersectionGraph(
            {v: normalize_label(permutation[i], permutation[j]) for v, (i, j) in self.labels.items()},
            self.directed,
            self.undirected,
        )


@dataclass(frozen=True)
class MarkedTree(IntersectionGraph):
    """Intersection graph whose undirected support is a tree, with a color count."""

    color_count: int = 0

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_tree():
            raise NotATreeException("graph is not a tree when edges are taken undirected")
        if self.color_count == 0:
            object.__setattr__(self, "color_count", self.color_span)
        if self.color_span > self.color_count:
            raise GraphException(f"label color {self.color_span} exceeds {self.color_count} colors")

    @classmethod
    def from_graph(cls, graph: IntersectionGraph, colors: int = 0) -> "MarkedTree":
        if isinstance(graph, MarkedTree) and colors in (0, graph.color_count):
            return graph
        return cls(graph.labels, graph.directed, graph.undirected, colors)

    def with_colors(self, colors: int) -> "MarkedTree":
        return MarkedTree(self.labels, self.directed, self.undirected, colors)


def graph_from_edges(
    labels: Dict[VertexId, Label],
    directed: Iterable[Tuple[VertexId, VertexId]] = (),
    undirected: Iterable[Tuple[VertexId, VertexId]] = (),
) -> IntersectionGraph:
    return IntersectionGraph(labels, frozenset(directed), frozenset(frozenset(e) for e in undirected))
