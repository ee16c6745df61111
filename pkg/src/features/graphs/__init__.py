from .analysis import (
    Bough,
    BoughReport,
    bough_report,
    children_in_order,
    is_semisymmetric,
    is_trimmed,
    rooted_code,
    select_trunk,
    trunks,
)
from .builder import intersection_graph
from .conditions import BaseCondition, Violation, build_default_conditions
from .export import to_dict, to_dot
from .isomorphism import canonical_form, graphs_isomorphic
from .model import (
    DIRECTED,
    UNDIRECTED,
    IntersectionGraph,
    MarkedTree,
    VertexId,
    format_label,
    graph_from_edges,
)
from .generation import labelled_trees
from .oracle import brute_force_realizable, realized_forms
from .realizability import ACCEPTED, REJECTED, RealizabilityReport, apply_relabeling, check_realizable
from .treefile import format_graph, load_tree, parse_graph_text, parse_tree_text

__all__ = [
    "IntersectionGraph",
    "MarkedTree",
    "VertexId",
    "DIRECTED",
    "UNDIRECTED",
    "format_label",
    "graph_from_edges",
    "intersection_graph",
    "is_semisymmetric",
    "Bough",
    "BoughReport",
    "bough_report",
    "trunks",
    "is_trimmed",
    "rooted_code",
    "children_in_order",
    "select_trunk",
    "graphs_isomorphic",
    "canonical_form",
    "to_dot",
    "to_dict",
    "parse_graph_text",
    "parse_tree_text",
    "load_tree",
    "format_graph",
    "BaseCondition",
    "Violation",
    "build_default_conditions",
    "RealizabilityReport",
    "ACCEPTED",
    "REJECTED",
    "apply_relabeling",
    "check_realizable",
    "brute_force_realizable",
    "realized_forms",
    "labelled_trees",
]
