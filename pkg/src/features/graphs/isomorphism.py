"""Labelled isomorphism of intersection graphs."""

import itertools
from collections import Counter
from typing import Dict, List, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import categorical_edge_match, categorical_node_match

from .analysis import rooted_code
from .model import IntersectionGraph, VertexId

_node_match = categorical_node_match("label", None)
_edge_match = categorical_edge_match("kind", None)


def _invariants(graph: IntersectionGraph) -> Tuple:
    return (
        len(graph),
        len(graph.directed),
        len(graph.undirected),
        tuple(sorted(Counter(graph.labels.values()).items())),
    )


def graphs_isomorphic(first: IntersectionGraph, second: IntersectionGraph) -> bool:
    """Bijection preserving labels, edge kinds and edge directions."""
    if _invariants(first) != _invariants(second):
        return False
    return nx.is_isomorphic(
        first.to_networkx(), second.to_networkx(), node_match=_node_match, edge_match=_edge_match
    )


def _encode(graph: IntersectionGraph, order: List[VertexId]) -> Tuple:
    position: Dict[VertexId, int] = {v: i for i, v in enumerate(order)}
    labels = tuple(graph.labels[v] for v in order)
    directed = tuple(sorted((position[a], position[b]) for a, b in graph.directed))
    undirected = tuple(sorted(tuple(sorted(position[v] for v in edge)) for edge in graph.undirected))
    return labels, directed, undirected


def canonical_form(graph: IntersectionGraph) -> Tuple:
    """Hashable form equal exactly for isomorphic graphs.

    Trees use the smallest rooted code; other graphs search orderings within label classes.
    """
    if graph.is_tree():
        return ("tree", min(rooted_code(graph, v) for v in graph.vertices))
    groups: Dict[Tuple[int, int], List[VertexId]] = {}
    for vertex in graph.vertices:
        groups.setdefault(graph.labels[vertex], []).append(vertex)
    keys = sorted(groups)
    best = None
    for choice in itertools.product(*(itertools.permutations(groups[k]) for k in keys)):
        order = [v for block in choice for v in block]
        code = _encode(graph, order)
        if best is None or code < best:
            best = code
    return ("graph",) + (best if best is not None else ((), (), ()))
