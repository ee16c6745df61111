"""Every labelled, edge-typed tree on a few vertices, up to isomorphism."""

from itertools import combinations_with_replacement, product
from typing import Dict, Iterator, List, Tuple

import networkx as nx

from src.features.diagrams import canonical_name

from .analysis import is_semisymmetric
from .isomorphism import canonical_form
from .model import IntersectionGraph, Label, MarkedTree

# per edge (u, v) with u < v
_KINDS = ("--", "->", "<-")


def _shapes(size: int) -> Iterator[nx.Graph]:
    if size == 1:
        single = nx.Graph()
        single.add_node(0)
        yield single
        return
    yield from nx.nonisomorphic_trees(size)


def _graph(names: List[str], labels: Tuple[Label, ...], edges: List[Tuple[int, int]], kinds: Tuple[str, ...]) -> IntersectionGraph:
    directed = []
    undirected = []
    for (u, v), kind in zip(edges, kinds):
        if kind == "--":
            undirected.append((names[u], names[v]))
        elif kind == "->":
            directed.append((names[u], names[v]))
        else:
            directed.append((names[v], names[u]))
    return IntersectionGraph(dict(zip(names, labels)), frozenset(directed), frozenset(undirected))


def labelled_trees(size: int, colors: int) -> List[MarkedTree]:
    """Trees on `size` vertices with labels over 1..colors, every color used.

    Adjacent labels share a color and directed edges join marked vertices only.
    """
    labels: List[Label] = list(combinations_with_replacement(range(1, colors + 1), 2))
    names = [canonical_name(i) for i in range(size)]
    found: Dict[Tuple, MarkedTree] = {}
    for shape in _shapes(size):
        edges = sorted(tuple(sorted(edge)) for edge in shape.edges())
        for assignment in product(labels, repeat=size):
            if {c for label in assignment for c in label} != set(range(1, colors + 1)):
                continue
            if any(not set(assignment[u]) & set(assignment[v]) for u, v in edges):
                continue
            for kinds in product(_KINDS, repeat=len(edges)):
                graph = _graph(names, assignment, edges, kinds)
                if not is_semisymmetric(graph):
                    continue
                found.setdefault(canonical_form(graph), MarkedTree.from_graph(graph))
    return [found[key] for key in sorted(found)]
