import pytest

from src.core.exceptions import CapExceededException, GraphException
from src.features.graphs import (
    ACCEPTED,
    REJECTED,
    apply_relabeling,
    brute_force_realizable,
    build_default_conditions,
    canonical_form,
    check_realizable,
    graph_from_edges,
    graphs_isomorphic,
    intersection_graph,
    parse_tree_text,
    realized_forms,
)

CHAIN = "v x 1 2\nv y 2 3\ne x -> y\n"
SKIPPING = "v x 1 3\nv y 2 3\ne x -> y\n"


def test_default_conditions_are_numbered():
    conditions = build_default_conditions()

    assert [c.number for c in conditions] == [1, 2, 3, 4, 5, 6]
    assert [c.number for c in conditions if c.depends_on_coloring] == [4, 5]
    assert all(c.description for c in conditions)


def test_chain_is_accepted_without_relabeling():
    report = check_realizable(parse_tree_text(CHAIN), 3)

    assert report.verdict == ACCEPTED
    assert report.relabeling == (1, 2, 3)
    assert report.violations == ()


def test_first_passing_relabeling_is_reported():
    tree = parse_tree_text(SKIPPING)
    report = check_realizable(tree, 3)

    assert report.accepted
    assert report.relabeling == (1, 3, 2)
    assert apply_relabeling(tree, report.relabeling).labels == {"x": (1, 2), "y": (2, 3)}


def test_undirected_path_between_marked_vertices_is_rejected(broken_tree):
    report = check_realizable(broken_tree, 3)

    assert report.verdict == REJECTED
    assert 6 in {v.condition for v in report.violations}
    assert report.to_dict()["verdict"] == "rejected"


def test_missing_directed_edge_is_rejected():
    tree = parse_tree_text("v x 1 2\nv y 2 3\ne x -- y\n")
    report = check_realizable(tree, 3)

    assert not report.accepted
    assert 3 in {v.condition for v in report.violations}


def test_shared_color_condition():
    tree = parse_tree_text("v x 1 2\nv u 3 3\nv y 2 3\ne x -> y\ne y -- u\n")
    assert check_realizable(tree, 3).accepted

    disjoint = graph_from_edges({"x": (1, 2), "u": (3, 3)}, undirected=[("x", "u")])
    report = check_realizable(disjoint, 3)
    assert 1 in {v.condition for v in report.violations}


def test_too_many_colors_is_an_error():
    with pytest.raises(GraphException):
        check_realizable(parse_tree_text(CHAIN), 2)


def test_two_colors_use_search(path_tree):
    report = check_realizable(path_tree, 2)

    assert report.accepted
    assert report.method == "brute-force"
    assert graphs_isomorphic(intersection_graph(report.witness), path_tree)
    assert report.to_dict()["witness"] == report.witness.to_text()


def test_two_colors_rejects_directed_marked_pair():
    tree = parse_tree_text("v x 1 2\nv y 1 2\ne x -> y\n")
    report = check_realizable(tree, 2)

    assert report.verdict == REJECTED
    assert report.witness is None


def test_oracle_uses_every_strand(path_tree):
    witness = brute_force_realizable(path_tree, 2)

    assert witness is not None
    assert all(witness.strands)
    assert brute_force_realizable(parse_tree_text("v a 1 1\n"), 2) is None


def test_oracle_vertex_bound(path_tree):
    with pytest.raises(CapExceededException):
        brute_force_realizable(path_tree, 2, max_degree=2)


def test_realized_forms_index(path_tree):
    forms = realized_forms(3, 2)

    assert canonical_form(path_tree) in forms
    assert canonical_form(parse_tree_text("v x 1 2\nv y 1 2\ne x -> y\n")) not in realized_forms(2, 2)
