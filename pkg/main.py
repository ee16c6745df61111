import argparse
import dataclasses
import json
import sys
import traceback
from typing import Callable, Dict, List, Optional, Sequence

from src.core import ChordToolkitException, Settings, configure_logging
from src.features.diagrams import enumerate_diagrams, is_connected, parse_diagram
from src.features.graphs import check_realizable, intersection_graph, is_trimmed, load_tree, to_dict, to_dot
from src.features.reconstruction import reconstruct, round_trip_check
from src.features.relations import (
    BasisCache,
    LinearCombination,
    RelationConfig,
    RelationSet,
    Ring,
    load_relation_config,
    relation_basis,
    subspace_dimension,
)
from src.features.transformations import MoveRecord, load_orbit_config, orbit
from src.pipeline import (
    BaseCheck,
    CentralityCheck,
    ClassCollapseCheck,
    GeneralizedFourTermCheck,
    OrbitClassCheck,
    ShareChordCheck,
    ShareDualityCheck,
    SlideInvarianceCheck,
    TorsionCheck,
    TreeClassCheck,
    VerificationContext,
    VerificationRunner,
)

VERIFY_CHECKS = (
    "thm-2comp",
    "thm-ncomp",
    "lemma-share",
    "prop-orbit",
    "centrality",
    "gen4t",
    "cor-simple",
    "lemma-endtoend",
    "treeclass",
)


def _print_json(payload: object) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _banner(title: str) -> None:
    print("=" * 60)
    print(title)
    print("=" * 60)


class Toolkit:
    """Settings plus per-invocation overrides, shared by the subcommands."""

    def __init__(self, args: argparse.Namespace, settings: Settings) -> None:
        self.args = args
        self.settings = settings
        config = load_relation_config(settings)
        overrides: Dict[str, object] = {}
        if args.cap is not None:
            overrides["diagram_cap"] = args.cap
        if args.cache_dir is not None:
            overrides["cache_dir"] = args.cache_dir
        if args.allow_degree_five:
            overrides["allow_degree_five"] = True
        self.relation_config: RelationConfig = dataclasses.replace(config, **overrides)
        self.relations = RelationSet.parse(args.relations)
        self.ring = Ring.parse(args.ring or Ring.RATIONAL.value)

    @property
    def cap(self) -> int:
        return self.relation_config.diagram_cap

    @property
    def cache(self) -> Optional[BasisCache]:
        if not self.relation_config.cache_dir:
            return None
        return BasisCache(self.relation_config.cache_dir)

    def basis(self, degree: int, strand_count: int, ring: Optional[Ring] = None):
        ring = ring or self.ring
        cache = self.cache
        if cache is None:
            return relation_basis(degree, strand_count, self.relations, ring, self.relation_config)
        return cache.get_or_build(degree, strand_count, self.relations, ring, self.relation_config)


def cmd_enumerate(kit: Toolkit) -> int:
    args = kit.args
    diagrams = enumerate_diagrams(args.degree, args.strands, cap=kit.cap)
    if args.connected:
        diagrams = [d for d in diagrams if is_connected(d, kit.settings.connectivity)]
    codes = [d.code for d in diagrams]
    if args.json:
        _print_json({"degree": args.degree, "strands": args.strands, "count": len(codes), "diagrams": codes})
        return 0
    for code in codes:
        print(code)
    print(f"total: {len(codes)}")
    return 0


def cmd_graph(kit: Toolkit) -> int:
    args = kit.args
    graph = intersection_graph(parse_diagram(args.diagram))
    if args.json or args.format == "json":
        _print_json(to_dict(graph))
    else:
        print(to_dot(graph), end="")
    return 0


def cmd_equal(kit: Toolkit) -> int:
    args = kit.args
    first = LinearCombination.parse(args.first)
    second = LinearCombination.parse(args.second)
    codes = first.codes + second.codes
    if not codes:
        raise ChordToolkitException("both sides are zero; nothing to compare")
    sample = parse_diagram(codes[0])
    basis = kit.basis(sample.degree, sample.strand_count)
    reduced = basis.reduce(first - second)
    equal = reduced.is_zero()
    if args.json:
        _print_json({"equal": equal, "reduced_difference": reduced.to_dict(), "relations": str(kit.relations), "ring": kit.ring.value})
    else:
        print("equal" if equal else "not equal")
        if not equal:
            print(f"reduced difference: {reduced}")
    return 0


def cmd_dim(kit: Toolkit) -> int:
    args = kit.args
    basis = kit.basis(args.degree, args.strands, Ring.RATIONAL)
    payload = {
        "degree": args.degree,
        "strands": args.strands,
        "relations": str(kit.relations),
        "diagrams": len(basis.codes),
        "rank": basis.rank,
        "dimension": basis.dimension,
    }
    if args.json:
        _print_json(payload)
    else:
        print(basis.dimension)
    return 0


def cmd_dim_trees(kit: Toolkit) -> int:
    args = kit.args
    basis = kit.basis(args.degree, 2, Ring.RATIONAL)
    trees = []
    for diagram in enumerate_diagrams(args.degree, 2, cap=kit.cap):
        graph = intersection_graph(diagram)
        if graph.is_tree() and is_trimmed(graph):
            trees.append(diagram)
    report = subspace_dimension(trees, basis)
    if args.json:
        _print_json({"degree": args.degree, "trees": len(trees), "dimension": report.dimension, "independent": list(report.independent)})
        return 0
    print(f"trimmed-tree diagrams: {len(trees)}")
    print(f"dimension: {report.dimension}")
    for code in report.independent:
        print(f"  {code}")
    return 0


def cmd_realizable(kit: Toolkit) -> int:
    args = kit.args
    tree = load_tree(args.treefile, args.colors)
    report = check_realizable(tree, args.colors, cap=kit.cap)
    if args.json:
        _print_json(report.to_dict())
        return 0
    print(report.verdict)
    if report.relabeling:
        print(f"relabeling: {' '.join(str(c) for c in report.relabeling)}")
    for violation in report.violations:
        print(f"  condition {violation.condition}: {', '.join(violation.vertices)} ({violation.detail})")
    return 0


def cmd_reconstruct(kit: Toolkit) -> int:
    args = kit.args
    tree = load_tree(args.treefile, args.colors)
    diagram = reconstruct(tree, args.colors)
    verified = round_trip_check(tree, args.colors, cap=kit.cap) if args.verify else None
    if args.json:
        _print_json({"diagram": diagram.to_text(), "verified": verified})
    else:
        print(diagram.to_text())
        if verified is not None:
            print("round trip: ok" if verified else "round trip: MISMATCH")
    return 1 if verified is False else 0


def cmd_orbit(kit: Toolkit) -> int:
    args = kit.args
    trace: Optional[List[MoveRecord]] = [] if args.trace else None
    codes = sorted(orbit(parse_diagram(args.diagram), load_orbit_config(kit.settings), trace))
    if args.json:
        payload: Dict[str, object] = {"size": len(codes), "orbit": codes}
        if trace is not None:
            payload["trace"] = [dataclasses.asdict(record) for record in trace]
        _print_json(payload)
        return 0
    for code in codes:
        print(code)
    print(f"orbit size: {len(codes)}")
    for record in trace or []:
        print(f"  {record}")
    return 0


def build_check(kit: Toolkit, name: str) -> BaseCheck:
    args = kit.args
    config = kit.relation_config
    cache = kit.cache
    connectivity = kit.settings.connectivity
    builders: Dict[str, Callable[[], BaseCheck]] = {
        "thm-2comp": lambda: ClassCollapseCheck(args.max_degree, 2, True, config, connectivity, cache),
        "thm-ncomp": lambda: ClassCollapseCheck(args.max_degree, args.strands, False, config, connectivity, cache),
        "lemma-share": lambda: ShareDualityCheck(args.max_degree, 2, kit.cap),
        "prop-orbit": lambda: OrbitClassCheck(args.max_degree, load_orbit_config(kit.settings), connectivity, kit.cap),
        "centrality": lambda: CentralityCheck(config=config, cache=cache, max_total=args.max_degree),
        "gen4t": lambda: GeneralizedFourTermCheck(args.max_degree, config=config, cache=cache),
        "cor-simple": lambda: ShareChordCheck(args.max_degree, config=config, cache=cache),
        "lemma-endtoend": lambda: SlideInvarianceCheck(args.max_degree, config, cache),
        "treeclass": lambda: TreeClassCheck(args.max_degree, args.strands, kit.cap, args.round_trip_vertices),
    }
    return builders[name]()


def _report(context: VerificationContext, as_json: bool) -> None:
    if as_json:
        _print_json(context.to_dict())
        return
    _banner(f"VERIFY {context.check}")
    for key, value in sorted(context.parameters.items()):
        print(f"{key}: {value}")
    print(f"Cases checked: {len(context.certificates)}")
    print(f"Failed: {len(context.failures)}")
    for certificate in context.failures:
        print(f"  - {certificate.case}")
        print(f"    * {json.dumps(certificate.detail, sort_keys=True)}")
    for error in context.errors:
        print(f"  ! {error}")
    print("=" * 60)


def _runner(kit: Toolkit) -> VerificationRunner:
    parallel = kit.args.parallel and kit.settings.max_workers > 1
    return VerificationRunner(max_workers=kit.settings.max_workers, parallel=parallel)


def cmd_verify(kit: Toolkit) -> int:
    args = kit.args
    if args.check == "thm-ncomp" and args.strands < 3:
        raise ChordToolkitException("thm-ncomp needs --strands 3 or more")
    context = _runner(kit).run(build_check(kit, args.check))
    _report(context, args.json)
    return 0 if context.passed else 1


def cmd_torsion(kit: Toolkit) -> int:
    args = kit.args
    # torsion lives in the integral quotient; only an explicit --ring overrides that
    ring = Ring.parse(args.ring) if args.ring else Ring.INTEGER
    check = TorsionCheck(
        args.degree, args.strands, kit.relation_config, kit.settings.connectivity, kit.relations, ring
    )
    context = _runner(kit).run(check)
    if args.json:
        _print_json(context.to_dict())
        return 1 if context.has_errors() else 0
    _banner(f"TORSION n={args.degree} k={args.strands}")
    factors = context.parameters.get("factors", [])
    print(f"relations: {context.parameters.get('relations')}")
    print(f"invariant factors > 1: {' '.join(str(f) for f in factors) or 'none'}")
    print(f"rank: {context.parameters.get('rank')}")
    print(f"classes compared: {len(context.certificates)}")
    for certificate in context.failures:
        for pair in certificate.detail["pairs"]:
            order = pair["order"] if pair["order"] is not None else "infinite"
            print(f"  - {certificate.case} vs {pair['diagram']}: order {order}")
    for error in context.errors:
        print(f"  ! {error}")
    print("=" * 60)
    return 1 if context.has_errors() else 0


COMMANDS: Dict[str, Callable[[Toolkit], int]] = {
    "enumerate": cmd_enumerate,
    "graph": cmd_graph,
    "equal": cmd_equal,
    "dim": cmd_dim,
    "dim-trees": cmd_dim_trees,
    "torsion": cmd_torsion,
    "realizable": cmd_realizable,
    "reconstruct": cmd_reconstruct,
    "orbit": cmd_orbit,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chord-toolkit", description="Chord diagrams for string links")
    parser.add_argument("--relations", default="1t,4t", help="comma separated: 1t, 4t, as")
    parser.add_argument("--ring", default=None, choices=["q", "z"], help="q unless the command says otherwise")
    parser.add_argument("--cap", type=int, default=None, help="largest diagram count to enumerate")
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--cache-dir", default=None)
    parser.add_argument("--allow-degree-five", action="store_true")
    parser.add_argument("--env", default=None, help="path to a .env file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate")
    p.add_argument("degree", type=int)
    p.add_argument("strands", type=int)
    p.add_argument("--connected", action="store_true")

    p = sub.add_parser("graph")
    p.add_argument("diagram")
    p.add_argument("--format", choices=["dot", "json"], default="dot")

    p = sub.add_parser("equal")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("dim")
    p.add_argument("degree", type=int)
    p.add_argument("strands", type=int)

    p = sub.add_parser("dim-trees")
    p.add_argument("degree", type=int)

    p = sub.add_parser("torsion")
    p.add_argument("degree", type=int)
    p.add_argument("strands", type=int)
    p.add_argument("--parallel", action="store_true")

    for name in ("realizable", "reconstruct"):
        p = sub.add_parser(name)
        p.add_argument("treefile")
        p.add_argument("-n", "--colors", type=int, required=True)
        if name == "reconstruct":
            p.add_argument("--verify", action="store_true")

    p = sub.add_parser("orbit")
    p.add_argument("diagram")
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("verify")
    p.add_argument("check", choices=VERIFY_CHECKS)
    p.add_argument("--max-degree", type=int, default=3, help="degree bound (vertex bound for treeclass)")
    p.add_argument("--strands", type=int, default=3, help="strands for thm-ncomp, colors for treeclass")
    p.add_argument("--round-trip-vertices", type=int, default=None, help="treeclass: rebuild accepted trees up to this size")
    p.add_argument("--parallel", action="store_true")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings = Settings.load(args.env)
    configure_logging(settings.log_level, settings.log_file)
    try:
        kit = Toolkit(args, settings)
        return COMMANDS[args.command](kit)
    except ChordToolkitException as e:
        print(f"Fatal error: {e}", file=sys.stderr)
        return 1


# Entry point
if __name__ == "__main__":
    try:
        sys.exit(main())
    except Exception as e:
        print(f"Fatal error: {e}", file=sys.stderr)
        traceback.print_exc(file=sys.stderr)
        sys.exit(1)
