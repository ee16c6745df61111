"""Line-oriented tree files.

    v <id> <i> <j>      vertex labelled {i,j}
    e <id1> -> <id2>    directed edge
    e <id1> -- <id2>    undirected edge

Blank lines and anything after `#` are ignored.
"""

from pathlib import Path
from typing import Dict, List, Set, Tuple, Union

from src.core.exceptions import GraphException, TreeFormatException
from src.core.utils.validation import validate_file_exists

from .model import IntersectionGraph, Label, MarkedTree, VertexId


def parse_graph_text(text: str) -> IntersectionGraph:
    labels: Dict[VertexId, Label] = {}
    directed: Set[Tuple[VertexId, VertexId]] = set()
    undirected: Set[frozenset] = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "v" and len(fields) == 4:
            vertex = fields[1]
            if vertex in labels:
                raise TreeFormatException(f"line {number}: vertex {vertex} declared twice")
            try:
                first, second = int(fields[2]), int(fields[3])
            except ValueError as exc:
                raise TreeFormatException(f"line {number}: colors must be integers") from exc
            if first < 1 or second < 1:
                raise TreeFormatException(f"line {number}: colors are 1-based")
            labels[vertex] = (min(first, second), max(first, second))
        elif fields[0] == "e" and len(fields) == 4 and fields[2] in ("->", "--"):
            source, target = fields[1], fields[3]
            if fields[2] == "->":
                directed.add((source, target))
            else:
                undirected.add(frozenset((source, target)))
        else:
            raise TreeFormatException(f"line {number}: cannot parse {raw.strip()!r}")
    try:
        return IntersectionGraph(labels, frozenset(directed), frozenset(undirected))
    except GraphException as exc:
        raise TreeFormatException(str(exc)) from exc


def parse_tree_text(text: str, colors: int = 0) -> MarkedTree:
    return MarkedTree.from_graph(parse_graph_text(text), colors)


def load_tree(path: Union[str, Path], colors: int = 0) -> MarkedTree:
    file_path = Path(path)
    validate_file_exists(str(file_path), TreeFormatException)
    return parse_tree_text(file_path.read_text(encoding="utf-8"), colors)


def format_graph(graph: IntersectionGraph) -> str:
    lines: List[str] = []
    for vertex in graph.vertices:
        first, second = graph.labels[vertex]
        lines.append(f"v {vertex} {first} {second}")
    for source, target in sorted(graph.directed):
        lines.append(f"e {source} -> {target}")
    for first, second in sorted(tuple(sorted(edge)) for edge in graph.undirected):
        lines.append(f"e {first} -- {second}")
    return "\n".join(lines) + "\n"
