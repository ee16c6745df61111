import pytest

from src.core.exceptions import InfeasibleTreeException, NotATreeException, ReconstructionException
from src.features.diagrams import parse_diagram
from src.features.graphs import (
    brute_force_realizable,
    graph_from_edges,
    graphs_isomorphic,
    intersection_graph,
    parse_tree_text,
)
from src.features.reconstruction import (
    Piece,
    check_two_strand,
    reconstruct,
    reconstruct_2strand,
    reconstruct_nstrand,
    round_trip_check,
    stacking_order,
)

CHAIN = "v x 1 2\nv y 2 3\ne x -> y\n"
SKIPPING = "v x 1 3\nv y 2 3\ne x -> y\n"
DIRECTED_PAIR = "v x 1 2\nv y 1 2\ne x -> y\n"
UNTRIMMED_PATH = "v x 1 2\nv u 1 1\nv w 1 1\nv y 1 2\ne x -- u\ne u -- w\ne w -- y\n"
HOOK = "k=2 [c a c b][b a]"


# ---------------------------------------------------------------------------
#  Two strands
# ---------------------------------------------------------------------------

def test_path_tree_reconstructs_around_trunk(path_tree):
    assert check_two_strand(path_tree) == "u"
    diagram = reconstruct_2strand(path_tree)

    assert diagram.to_text() == "k=2 [u m u][w m w]"
    assert graphs_isomorphic(intersection_graph(diagram), path_tree)


def test_marked_neighbors_cross_unmarked_trunk(broken_tree):
    # rejected on three colors, fine on two
    diagram = reconstruct(broken_tree, 2)
    assert diagram.to_text() == "k=2 [u x y u][x y]"


def test_two_strand_feasibility_scan():
    with pytest.raises(InfeasibleTreeException):
        check_two_strand(parse_tree_text(DIRECTED_PAIR))
    with pytest.raises(InfeasibleTreeException):
        check_two_strand(parse_tree_text(CHAIN))
    with pytest.raises(NotATreeException):
        check_two_strand(graph_from_edges({"a": (1, 1), "b": (1, 1)}))


def test_directed_pair_has_no_two_strand_witness():
    with pytest.raises(InfeasibleTreeException):
        reconstruct(parse_tree_text(DIRECTED_PAIR), 2)


def test_untrimmed_tree_is_not_repaired_by_search():
    tree = parse_tree_text(UNTRIMMED_PATH)
    assert brute_force_realizable(tree, 2) is not None

    with pytest.raises(InfeasibleTreeException, match="not trimmed"):
        reconstruct(tree, 2)
    with pytest.raises(InfeasibleTreeException):
        round_trip_check(tree, 2)


def test_marked_block_sits_above_nested_trunk_run():
    diagram = reconstruct_2strand(intersection_graph(parse_diagram(HOOK)))
    assert diagram.to_text() == HOOK

    # directly above the trunk endpoint, c would enclose b
    squeezed = parse_diagram("k=2 [c a b c][b a]")
    assert not intersection_graph(squeezed).is_tree()


def test_single_strand_nests_around_trunk():
    tree = parse_tree_text("v a 1 1\nv b 1 1\ne a -- b\n")
    diagram = reconstruct(tree, 1)

    assert diagram.strand_count == 1
    assert graphs_isomorphic(intersection_graph(diagram), tree)


# ---------------------------------------------------------------------------
#  Three or more strands
# ---------------------------------------------------------------------------

def test_chain_stacks_pieces_along_directed_edge():
    diagram = reconstruct_nstrand(parse_tree_text(CHAIN), 3)
    assert diagram.to_text() == "k=3 [x][x y][y]"


def test_relabeled_tree_maps_back_to_original_colors():
    tree = parse_tree_text(SKIPPING)
    diagram = reconstruct(tree, 3)

    assert diagram.to_text() == "k=3 [x][y][x y]"
    assert intersection_graph(diagram).labels == {"x": (1, 3), "y": (2, 3)}


def test_stacking_order_follows_directed_edges():
    tree = parse_tree_text(CHAIN)
    lower = Piece("x", 1, parse_diagram("k=2 [x][x]"))
    upper = Piece("y", 2, parse_diagram("k=2 [y][y]"))

    assert stacking_order(tree, [upper, lower]) == [lower, upper]


def test_rejected_tree_raises(broken_tree):
    with pytest.raises(ReconstructionException):
        reconstruct_nstrand(broken_tree, 3)
    with pytest.raises(ReconstructionException):
        round_trip_check(broken_tree, 3)


# ---------------------------------------------------------------------------
#  Round trip
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "text,colors",
    [
        ("v u 1 1\nv m 1 2\nv w 2 2\ne u -- m\ne m -- w\n", 2),
        ("v a 1 2\nv b 1 2\ne a -- b\n", 2),
        (CHAIN, 3),
        (SKIPPING, 3),
    ],
    ids=["path", "marked-pair", "chain", "skipping"],
)
def test_round_trip(text, colors):
    assert round_trip_check(parse_tree_text(text, colors), colors)


def test_round_trip_on_star(star_diagram):
    tree = intersection_graph(star_diagram)
    assert round_trip_check(tree, 2)
