"""DOT and JSON renderings of intersection graphs."""

from typing import Dict, List

from .model import IntersectionGraph, format_label


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def to_dot(graph: IntersectionGraph, name: str = "gamma") -> str:
    lines: List[str] = [f"digraph {name} {{"]
    for vertex in graph.vertices:
        attrs = f"label={_quote(format_label(graph.labels[vertex]))}"
        if graph.is_marked(vertex):
            attrs += ", peripheries=2"
        lines.append(f"  {_quote(vertex)} [{attrs}];")
    for source, target in sorted(graph.directed):
        lines.append(f"  {_quote(source)} -> {_quote(target)};")
    for first, second in sorted(tuple(sorted(edge)) for edge in graph.undirected):
        lines.append(f"  {_quote(first)} -> {_quote(second)} [dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(graph: IntersectionGraph) -> Dict[str, object]:
    return {
        "vertices": [
            {"id": v, "label": list(graph.labels[v]), "marked": graph.is_marked(v)} for v in graph.vertices
        ],
        "directed": [list(edge) for edge in sorted(graph.directed)],
        "undirected": sorted(sorted(edge) for edge in graph.undirected),
    }
