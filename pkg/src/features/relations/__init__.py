from .basis import (
    RelationBasis,
    SubspaceReport,
    check_degree_gate,
    dimension,
    equal_mod,
    rational_coordinates,
    reduce,
    relation_basis,
    subspace_dimension,
)
from .cache import GENERATOR_VERSION, BasisCache
from .config import RelationConfig, load_relation_config
from .elimination import Echelon, extended_gcd, modular_rank
from .generators import (
    antisymmetry_sign,
    four_term_relation,
    four_term_relations,
    gen_antisymmetry,
    gen_four_term,
    gen_one_term,
    generalized_four_term,
    generate_relations,
    isolated_chords,
)
from .model import (
    ANTISYMMETRY,
    DEFAULT_RELATIONS,
    FOUR_TERM,
    ONE_TERM,
    LinearCombination,
    RelationSet,
    Ring,
    format_coefficient,
)
from .torsion import TorsionReport, element_order, lattice_invariants, torsion_invariants

__all__ = [
    "RelationBasis",
    "SubspaceReport",
    "check_degree_gate",
    "dimension",
    "equal_mod",
    "rational_coordinates",
    "reduce",
    "relation_basis",
    "subspace_dimension",
    "GENERATOR_VERSION",
    "BasisCache",
    "RelationConfig",
    "load_relation_config",
    "Echelon",
    "extended_gcd",
    "modular_rank",
    "antisymmetry_sign",
    "four_term_relation",
    "four_term_relations",
    "gen_antisymmetry",
    "gen_four_term",
    "gen_one_term",
    "generalized_four_term",
    "generate_relations",
    "isolated_chords",
    "ANTISYMMETRY",
    "DEFAULT_RELATIONS",
    "FOUR_TERM",
    "ONE_TERM",
    "LinearCombination",
    "RelationSet",
    "Ring",
    "format_coefficient",
    "TorsionReport",
    "element_order",
    "lattice_invariants",
    "torsion_invariants",
]
