from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from src.core.exceptions import (
    CapExceededException,
    DiagramException,
    DiagramParseException,
    SlotRangeException,
    StrandMismatchException,
)
from src.features.diagrams import (
    ChordDiagram,
    build_star,
    canonical_code,
    canonical_name,
    chord_adjacency,
    connect_sum,
    coproduct,
    diagram_count,
    endpoint_runs,
    enumerate_diagrams,
    is_connected,
    is_share,
    parse_diagram,
    product,
    reverse_component,
    serialize,
    strand_distributions,
    wraps,
)

TwoStrand = st.integers(min_value=0, max_value=2).flatmap(lambda n: st.sampled_from(enumerate_diagrams(n, 2)))


# ---------------------------------------------------------------------------
#  Parsing and canonical codes
# ---------------------------------------------------------------------------

def test_parse_reads_strands_bottom_to_top():
    diagram = parse_diagram("k=2 [x y x][y]")

    assert diagram.strand_count == 2
    assert diagram.degree == 2
    assert diagram.strands == (("x", "y", "x"), ("y",))
    assert diagram.label("y") == (1, 2)
    assert diagram.is_marked("y")
    assert not diagram.is_marked("x")


def test_canonical_code_renames_in_first_appearance_order():
    assert parse_diagram("k=2 [x y x][y]").code == "k=2 [a b a][b]"
    assert serialize(parse_diagram("k=1 [q p q p]")) == "k=1 [a b a b]"
    assert canonical_code(parse_diagram("k=1 [a b a b]")) == "k=1 [a b a b]"


def test_empty_strands_are_allowed():
    diagram = parse_diagram("k=3 [a][][a]")
    assert diagram.strands[1] == ()
    assert diagram.label("a") == (1, 3)


@pytest.mark.parametrize(
    "text",
    ["k=2 [a a]", "[a a]", "k=0", "k=1 [a a", "k=1 [a-b a-b]", "k=1 [a a a]", "k=1 [a b]"],
)
def test_parse_rejects_malformed_text(text):
    with pytest.raises(DiagramParseException):
        parse_diagram(text)


def test_constructor_rejects_bad_endpoint_counts():
    with pytest.raises(DiagramException):
        ChordDiagram((("a", "b", "a"),))


def test_canonical_name_past_z():
    assert canonical_name(0) == "a"
    assert canonical_name(25) == "z"
    assert canonical_name(26) == "x26"


# ---------------------------------------------------------------------------
#  Enumeration
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("degree,strands,expected", [(1, 1, 1), (2, 1, 3), (3, 1, 15), (2, 2, 15), (3, 2, 105), (2, 3, 45), (5, 2, 10395)])
def test_diagram_count_formula(degree, strands, expected):
    assert diagram_count(degree, strands) == expected


@pytest.mark.parametrize("degree,strands", [(0, 2), (1, 2), (2, 2), (3, 2), (2, 3), (4, 1)])
def test_enumeration_matches_count_without_duplicates(degree, strands):
    diagrams = enumerate_diagrams(degree, strands)
    codes = [d.code for d in diagrams]

    assert len(codes) == diagram_count(degree, strands)
    assert len(set(codes)) == len(codes)
    assert all(d.code == d.to_text() for d in diagrams)


def test_enumeration_respects_cap():
    with pytest.raises(CapExceededException):
        enumerate_diagrams(3, 2, cap=100)


def test_strand_distributions_are_weak_compositions():
    assert list(strand_distributions(2, 2)) == [(0, 2), (1, 1), (2, 0)]


# ---------------------------------------------------------------------------
#  Algebra
# ---------------------------------------------------------------------------

def test_product_stacks_upper_on_lower():
    lower = parse_diagram("k=2 [a][a]")
    upper = parse_diagram("k=2 [a a][]")

    assert product(lower, upper).to_text() == "k=2 [a b b][a]"


def test_product_needs_equal_strand_counts():
    with pytest.raises(StrandMismatchException):
        product(parse_diagram("k=1 [a a]"), parse_diagram("k=2 [a][a]"))


@given(TwoStrand, TwoStrand, TwoStrand)
@settings(max_examples=40, deadline=None)
def test_product_is_associative(first, second, third):
    assert product(product(first, second), third) == product(first, product(second, third))


@given(TwoStrand)
@settings(max_examples=20, deadline=None)
def test_empty_diagram_is_a_unit(diagram):
    unit = ChordDiagram.empty(2)
    assert product(unit, diagram).code == diagram.code
    assert product(diagram, unit).code == diagram.code


def _pairs(pairs):
    return Counter((left.code, right.code) for left, right in pairs)


@given(TwoStrand, TwoStrand)
@settings(max_examples=40, deadline=None)
def test_coproduct_is_multiplicative(first, second):
    together = _pairs(coproduct(product(first, second)))
    separately = Counter(
        (product(a1, a2).code, product(b1, b2).code)
        for a1, b1 in coproduct(first)
        for a2, b2 in coproduct(second)
    )
    assert together == separately


def test_coproduct_counts_subsets():
    pairs = coproduct(parse_diagram("k=1 [a b a b]"))

    assert len(pairs) == 4
    assert pairs[0] == (parse_diagram("k=1 [a b a b]"), ChordDiagram.empty(1))
    assert _pairs(pairs)[("k=1 [a a]", "k=1 [a a]")] == 2


def test_coproduct_cap():
    with pytest.raises(CapExceededException):
        coproduct(parse_diagram("k=1 [a b a b]"), cap=2)


def test_connect_sum_splices_knot():
    knot = parse_diagram("k=1 [a a]")
    diagram = parse_diagram("k=2 [a][a]")

    assert connect_sum(knot, diagram, 2, 1).to_text() == "k=2 [a][a b b]"
    assert connect_sum(knot, diagram, 1, 0).to_text() == "k=2 [a a b][b]"


def test_connect_sum_validates_arguments():
    knot = parse_diagram("k=1 [a a]")
    diagram = parse_diagram("k=2 [a][a]")
    with pytest.raises(StrandMismatchException):
        connect_sum(diagram, diagram, 1, 0)
    with pytest.raises(SlotRangeException):
        connect_sum(knot, diagram, 3, 0)
    with pytest.raises(SlotRangeException):
        connect_sum(knot, diagram, 1, 5)


def test_reverse_component_is_an_involution():
    diagram = parse_diagram("k=2 [a b a c][b c]")
    reversed_once = reverse_component(diagram, 1)

    assert reversed_once.strands[0] == ("c", "a", "b", "a")
    assert reverse_component(reversed_once, 1) == diagram
    with pytest.raises(SlotRangeException):
        reverse_component(diagram, 0)


# ---------------------------------------------------------------------------
#  Shares, connectivity, stars
# ---------------------------------------------------------------------------

def test_share_on_one_and_two_arcs():
    diagram = parse_diagram("k=1 [a b b a c c]")

    one_arc = is_share(diagram, ["b"])
    two_arcs = is_share(diagram, ["a"])

    assert [(arc.start, arc.stop) for arc in one_arc.arcs] == [(1, 3)]
    assert [(arc.start, arc.stop) for arc in two_arcs.arcs] == [(0, 1), (3, 4)]
    assert is_share(diagram, ["a", "c"]) is not None


def test_three_runs_is_not_a_share():
    diagram = parse_diagram("k=1 [a b c a d c b d]")
    assert len(endpoint_runs(diagram, ["a", "c"])) == 3
    assert is_share(diagram, ["a", "c"]) is None


def test_wraps_needs_endpoints_on_both_sides():
    diagram = parse_diagram("k=2 [a b c b a][c]")

    assert wraps(diagram, "b", {"a", "c"})
    assert not wraps(diagram, "b", {"c"})
    # marked chords have one endpoint per strand
    assert not wraps(diagram, "c", {"a", "b"})
    with pytest.raises(DiagramException):
        wraps(diagram, "z", {"a"})


def test_share_rejects_unknown_chords():
    with pytest.raises(DiagramException):
        is_share(parse_diagram("k=1 [a a]"), ["z"])


def test_connectivity_modes():
    crossing = parse_diagram("k=1 [a b a b]")
    separate = parse_diagram("k=1 [a a b b]")
    # b's endpoints both sit inside a: two overlaps cancel mod 2
    nested = parse_diagram("k=1 [a b b a]")

    assert is_connected(crossing)
    assert not is_connected(separate)
    assert not is_connected(nested, "reduced")
    assert is_connected(nested, "raw")
    assert not is_connected(parse_diagram("k=2 [a a][]"))
    with pytest.raises(DiagramException):
        chord_adjacency(crossing, "loose")


def test_build_star_shape():
    star = build_star(1, 2)

    assert star.to_text() == "k=2 [b v b][c d v d c]"
    assert star.degree == 4
    assert star.is_marked("v")
    assert build_star(0, 0).to_text() == "k=2 [v][v]"
