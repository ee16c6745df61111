"""Each check at desk scale: case lists, certificate shape, and the expected verdict."""

import pickle

import pytest

from src.features.graphs import parse_tree_text
from src.features.relations import DEFAULT_RELATIONS, BasisCache
from src.features.transformations import OrbitConfig
from src.pipeline import (
    CentralityCheck,
    ClassCollapseCheck,
    GeneralizedFourTermCheck,
    OrbitClassCheck,
    ShareChordCheck,
    ShareDualityCheck,
    SlideInvarianceCheck,
    TorsionCheck,
    TreeClassCheck,
    VerificationRunner,
)
from src.pipeline.checks import BasisProvider, difference, tree_classes
from src.pipeline.checks.treeclass import describe


def _run(check):
    return VerificationRunner().run(check)


# ---------------------------------------------------------------------------
#  Shared plumbing
# ---------------------------------------------------------------------------

def test_tree_classes_group_by_graph():
    classes = tree_classes(2, 2, trimmed=True)

    assert all(degree == 2 for degree, _ in classes)
    assert (2, ("k=2 [a b][b a]",)) in classes
    assert classes == sorted(classes)


def test_tree_classes_skip_disconnected_diagrams():
    codes = {code for _, group in tree_classes(1, 2, trimmed=False) for code in group}
    assert codes == {"k=2 [a][a]"}


def test_difference():
    combination = difference("k=1 [a b b a]", "k=1 [a a b b]")
    assert combination.to_dict() == {"k=1 [a a b b]": -1, "k=1 [a b b a]": 1}


def test_basis_provider_builds_once(small_config):
    provider = BasisProvider(DEFAULT_RELATIONS, config=small_config)
    assert provider.get(2, 1) is provider.get(2, 1)


def test_basis_provider_drops_disk_cache_when_pickled(small_config, cache_dir):
    provider = BasisProvider(DEFAULT_RELATIONS, config=small_config, cache=BasisCache(cache_dir))
    provider.get(2, 1)
    copy = pickle.loads(pickle.dumps(provider))

    assert copy.cache is None
    assert copy.get(2, 1).rank == provider.get(2, 1).rank


# ---------------------------------------------------------------------------
#  Relation checks
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("strands,name", [(2, "thm-2comp"), (3, "thm-ncomp")])
def test_class_collapse(strands, name, small_config):
    max_degree = 3 if strands == 2 else 2
    # the CLI runs thm-ncomp over every tree diagram, trimmed or not
    ctx = _run(ClassCollapseCheck(max_degree, strands, strands == 2, config=small_config))

    assert ctx.check == name
    assert ctx.parameters["classes"] == len(ctx.certificates) > 0
    assert ctx.passed, ctx.to_dict()


def test_centrality(small_config):
    check = CentralityCheck(max_leaves=1, max_other=2, max_total=3, config=small_config)
    ctx = _run(check)

    assert any(c.case.startswith("J(1,0) * ") for c in ctx.certificates)
    assert ctx.passed, ctx.to_dict()


def test_generalized_four_term(small_config):
    ctx = _run(GeneralizedFourTermCheck(3, config=small_config))

    assert ctx.parameters["instances"] == len(ctx.certificates) > 0
    assert ctx.passed, ctx.to_dict()


def test_share_chord_relations(small_config):
    ctx = _run(ShareChordCheck(3, config=small_config))

    assert ctx.check == "cor-simple"
    assert ctx.parameters["instances"] == len(ctx.certificates) > 0
    assert any(len(c.detail["relation"]) < 4 for c in ctx.certificates)
    assert ctx.passed, ctx.to_dict()


def test_slides(small_config):
    ctx = _run(SlideInvarianceCheck(2, config=small_config))
    assert ctx.passed, ctx.to_dict()


def test_torsion_reports_invariants(small_config):
    ctx = _run(TorsionCheck(2, config=small_config))

    assert ctx.check == "torsion"
    assert {"factors", "rank", "residual_columns"} <= set(ctx.parameters)
    assert not ctx.errors


# ---------------------------------------------------------------------------
#  Combinatorial checks
# ---------------------------------------------------------------------------

def test_share_duality():
    ctx = _run(ShareDualityCheck(2))

    assert "k=2 [a b][b a]" in {c.case for c in ctx.certificates}
    assert ctx.passed, ctx.to_dict()


def test_share_duality_skips_wrapped_light_boughs():
    # b sits inside a on strand 1, so the light bough {a, c} takes three runs
    certificate = ShareDualityCheck(3).run_case("k=2 [a b c b a][c]")

    assert certificate.passed, certificate.detail
    assert certificate.detail["wrapped"] == 1


def test_orbits_match_classes():
    ctx = _run(OrbitClassCheck(2))

    assert all(c.detail["class_size"] == c.detail["orbit_size"] for c in ctx.certificates)
    assert ctx.passed, ctx.to_dict()


def test_tree_class_check():
    ctx = _run(TreeClassCheck(2, colors=3))

    assert ctx.parameters["trees"] == len(ctx.certificates) > 0
    assert all(c.detail["accepted"] == c.detail["realized"] for c in ctx.certificates)
    assert ctx.passed, ctx.to_dict()


def test_describe_tree():
    tree = parse_tree_text("v x 1 2\nv y 2 3\ne x -> y\n")
    assert describe(tree).count(";") == 2


def test_tree_class_round_trip_beyond_search_bound():
    ctx = _run(TreeClassCheck(1, colors=3, round_trip_vertices=2))

    assert ctx.parameters["round_trip_vertices"] == 2
    larger = [c for c in ctx.certificates if "realized" not in c.detail]
    assert larger and all(c.detail.get("round_trip", True) for c in larger)
    assert ctx.passed, ctx.to_dict()


# ---------------------------------------------------------------------------
#  Desk-scale bounds
# ---------------------------------------------------------------------------

@pytest.mark.slow
def test_orbits_match_classes_through_degree_four():
    ctx = _run(OrbitClassCheck(4, OrbitConfig(include_slides=False)))

    assert ctx.certificates
    assert ctx.passed, [c.case for c in ctx.certificates if not c.passed]


@pytest.mark.slow
def test_share_duality_through_degree_four():
    ctx = _run(ShareDualityCheck(4))
    assert ctx.passed, [c.case for c in ctx.certificates if not c.passed]


@pytest.mark.slow
def test_two_strand_collapse_through_degree_four(small_config):
    ctx = _run(ClassCollapseCheck(4, 2, True, config=small_config))
    assert ctx.passed, [c.case for c in ctx.certificates if not c.passed]


@pytest.mark.slow
def test_three_strand_collapse_through_degree_four(small_config):
    ctx = _run(ClassCollapseCheck(4, 3, False, config=small_config))

    assert ctx.parameters["trimmed"] is False
    assert ctx.passed, [c.case for c in ctx.certificates if not c.passed]


@pytest.mark.slow
def test_share_chord_relations_through_degree_four(small_config):
    ctx = _run(ShareChordCheck(4, max_share=3, config=small_config))
    assert ctx.passed, [c.case for c in ctx.certificates if not c.passed]


@pytest.mark.slow
def test_tree_classes_round_trip_through_five_vertices():
    ctx = _run(TreeClassCheck(4, colors=3, round_trip_vertices=5))

    assert ctx.parameters["round_trip_vertices"] == 5
    assert ctx.passed, [c.case for c in ctx.certificates if not c.passed]
