import pytest

from src.core.exceptions import GraphException, NotATreeException, TreeFormatException
from src.features.diagrams import parse_diagram
from src.features.graphs import (
    DIRECTED,
    UNDIRECTED,
    IntersectionGraph,
    MarkedTree,
    bough_report,
    canonical_form,
    children_in_order,
    format_graph,
    graph_from_edges,
    graphs_isomorphic,
    intersection_graph,
    is_semisymmetric,
    is_trimmed,
    labelled_trees,
    load_tree,
    parse_graph_text,
    parse_tree_text,
    rooted_code,
    select_trunk,
    to_dict,
    to_dot,
    trunks,
)

# x{1,2} - u{1,1} - y{1,2}: the marked ends hang off u
CHERRY = graph_from_edges({"x": (1, 2), "u": (1, 1), "y": (1, 2)}, undirected=[("x", "u"), ("u", "y")])


# ---------------------------------------------------------------------------
#  Building Γ
# ---------------------------------------------------------------------------

def test_crossing_chords_give_undirected_edge(crossing_pair):
    graph = intersection_graph(crossing_pair)

    assert graph.labels == {"a": (1, 1), "b": (1, 1)}
    assert graph.edge_kind("a", "b") == UNDIRECTED
    assert not graph.directed


def test_separated_and_nested_chords_give_no_edge():
    assert intersection_graph(parse_diagram("k=1 [a a b b]")).edge_kind("a", "b") is None
    assert intersection_graph(parse_diagram("k=1 [a b b a]")).edge_kind("a", "b") is None


def test_single_shared_endpoint_gives_directed_edge():
    graph = intersection_graph(parse_diagram("k=3 [a b][a][b]"))

    assert graph.labels == {"a": (1, 2), "b": (1, 3)}
    assert graph.directed == frozenset({("a", "b")})
    assert graph.edge_kind("b", "a") == DIRECTED


def test_marked_pair_on_two_strands():
    assert intersection_graph(parse_diagram("k=2 [a b][b a]")).edge_kind("a", "b") == UNDIRECTED
    assert intersection_graph(parse_diagram("k=2 [a b][a b]")).edge_kind("a", "b") is None


def test_graph_validation():
    with pytest.raises(GraphException):
        graph_from_edges({"a": (1, 1)}, directed=[("a", "a")])
    with pytest.raises(GraphException):
        graph_from_edges({"a": (1, 1)}, undirected=[("a", "z")])
    with pytest.raises(GraphException):
        graph_from_edges({"a": (1, 2), "b": (1, 2)}, directed=[("a", "b")], undirected=[("a", "b")])
    with pytest.raises(GraphException):
        graph_from_edges({"a": (0, 1)})


def test_labels_are_normalized():
    graph = graph_from_edges({"a": (2, 1)})
    assert graph.labels["a"] == (1, 2)
    assert graph.is_marked("a")
    assert graph.color_span == 2


def test_marked_tree_rejects_cycles_and_extra_colors():
    cycle = graph_from_edges(
        {"a": (1, 1), "b": (1, 1), "c": (1, 1)}, undirected=[("a", "b"), ("b", "c"), ("c", "a")]
    )
    with pytest.raises(NotATreeException):
        MarkedTree.from_graph(cycle)
    with pytest.raises(GraphException):
        MarkedTree.from_graph(graph_from_edges({"a": (1, 3)}), colors=2)
    assert MarkedTree.from_graph(graph_from_edges({"a": (1, 2)})).color_count == 2


# ---------------------------------------------------------------------------
#  Tree structure
# ---------------------------------------------------------------------------

def test_semisymmetry():
    assert is_semisymmetric(intersection_graph(parse_diagram("k=3 [a b][a][b]")))
    lopsided = graph_from_edges({"a": (1, 1), "b": (1, 2)}, directed=[("a", "b")])
    assert not is_semisymmetric(lopsided)


def test_boughs_of_path(path_tree):
    report = bough_report(path_tree, "m")

    assert [sorted(b.vertices) for b in report.boughs] == [["u"], ["w"]]
    assert all(b.light for b in report.boughs)
    assert report.is_trunk


def test_heavy_bough_and_trunk():
    at_x = bough_report(CHERRY, "x")

    assert [b.light for b in at_x.boughs] == [False]
    assert at_x.heavy[0].marked == ("y",)
    assert trunks(CHERRY) == ("u",)
    assert is_trimmed(CHERRY)


def test_untrimmed_tree_has_no_trunk():
    labels = {"x": (1, 2), "u": (1, 1), "y": (1, 2), "w": (1, 1), "z": (1, 2)}
    chain = graph_from_edges(labels, undirected=[("x", "u"), ("u", "y"), ("y", "w"), ("w", "z")])

    assert trunks(chain) == ()
    assert not is_trimmed(chain)
    assert select_trunk(chain) is None


def test_select_trunk_prefers_smallest_rooted_code(path_tree):
    assert select_trunk(path_tree) == "u"
    assert select_trunk(path_tree, marked_only=True) == "m"
    assert rooted_code(path_tree, "u") == "({1,1}-({1,2}-({2,2})))"


def test_children_in_order_sorted_by_code():
    star = intersection_graph(parse_diagram("k=2 [b v b][c v c]"))
    assert children_in_order(star, "v", None) == ["b", "c"]


def test_bough_report_needs_tree_and_vertex(path_tree):
    with pytest.raises(GraphException):
        bough_report(path_tree, "nope")
    with pytest.raises(NotATreeException):
        bough_report(intersection_graph(parse_diagram("k=1 [a a b b]")), "a")


# ---------------------------------------------------------------------------
#  Isomorphism and canonical forms
# ---------------------------------------------------------------------------

def test_isomorphism_respects_labels_and_directions():
    forward = intersection_graph(parse_diagram("k=3 [a b][a][b]"))
    renamed = intersection_graph(parse_diagram("k=3 [q p][q][p]"))
    backward = intersection_graph(parse_diagram("k=3 [b a][a][b]"))

    assert graphs_isomorphic(forward, renamed)
    assert canonical_form(forward) == canonical_form(renamed)
    assert not graphs_isomorphic(forward, backward)
    assert canonical_form(forward) != canonical_form(backward)


def test_canonical_form_for_non_trees():
    first = intersection_graph(parse_diagram("k=1 [a a b b]"))
    second = intersection_graph(parse_diagram("k=1 [a a c b b c]"))

    assert canonical_form(first)[0] == "graph"
    assert canonical_form(first) != canonical_form(second)


def test_labelled_trees_on_two_vertices():
    trees = labelled_trees(2, 2)

    assert len(trees) == 4
    assert sum(1 for t in trees if t.directed) == 1
    assert len({canonical_form(t) for t in trees}) == 4
    assert len(labelled_trees(1, 1)) == 1


# ---------------------------------------------------------------------------
#  Tree files and export
# ---------------------------------------------------------------------------

def test_parse_tree_text(path_tree):
    assert path_tree.labels == {"u": (1, 1), "m": (1, 2), "w": (2, 2)}
    assert path_tree.color_count == 2
    assert len(path_tree.undirected) == 2


def test_tree_file_round_trip(tree_file, path_tree):
    path = tree_file(format_graph(path_tree))
    assert load_tree(path) == path_tree


@pytest.mark.parametrize(
    "text",
    ["v a 1\n", "v a 1 x\n", "v a 0 1\n", "v a 1 1\nv a 1 2\n", "v a 1 1\ne a => b\n", "v a 1 1\ne a -> b\n"],
)
def test_tree_format_errors(text):
    with pytest.raises(TreeFormatException):
        parse_graph_text(text)


def test_tree_format_error_names_line():
    with pytest.raises(TreeFormatException, match="line 3"):
        parse_graph_text("# header\nv a 1 1\nbogus\n")


def test_load_tree_missing_file(tmp_path):
    with pytest.raises(TreeFormatException, match="File not found"):
        load_tree(str(tmp_path / "absent.txt"))


def test_parse_tree_rejects_forest():
    with pytest.raises(NotATreeException):
        parse_tree_text("v a 1 1\nv b 1 1\n")


def test_dot_export_marks_vertices_and_edges():
    graph = intersection_graph(parse_diagram("k=2 [b v b][v]"))
    dot = to_dot(graph)

    assert dot.startswith("digraph gamma {")
    assert '"v" [label="{1,2}", peripheries=2];' in dot
    assert '"b" [label="{1,1}"];' in dot
    assert '"b" -> "v" [dir=none];' in dot


def test_dict_export():
    graph = intersection_graph(parse_diagram("k=3 [a b][a][b]"))
    assert to_dict(graph) == {
        "vertices": [
            {"id": "a", "label": [1, 2], "marked": True},
            {"id": "b", "label": [1, 3], "marked": True},
        ],
        "directed": [["a", "b"]],
        "undirected": [],
    }


def test_subgraph_and_relabel():
    graph = intersection_graph(parse_diagram("k=3 [a b][a][b]"))

    assert graph.subgraph(["a"]).labels == {"a": (1, 2)}
    assert not graph.subgraph(["a"]).directed
    assert graph.relabel_colors({1: 3, 2: 2, 3: 1}).labels == {"a": (2, 3), "b": (1, 3)}
    assert isinstance(graph.without_directed(), IntersectionGraph)
