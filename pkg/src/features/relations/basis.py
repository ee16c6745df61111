"""Relation bases and quotient queries in the space of diagrams of one degree."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.exceptions import (
    DegreeMismatchException,
    RelationException,
    RingMismatchException,
)
from src.core.logging import get_logger
from src.features.diagrams import ChordDiagram, enumerate_diagrams, parse_diagram

from .config import RelationConfig
from .elimination import Echelon, Vector
from .generators import generate_relations
from .model import LinearCombination, RelationSet, Ring

logger = get_logger("relations.basis")


@dataclass
class RelationBasis:
    degree: int
    strand_count: int
    relations: RelationSet
    ring: Ring
    codes: Tuple[str, ...]
    echelon: Echelon
    antisymmetry_mode: str = "parity"
    index: Dict[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.index = {code: i for i, code in enumerate(self.codes)}

    @property
    def rank(self) -> int:
        return self.echelon.rank

    @property
    def dimension(self) -> int:
        return len(self.codes) - self.rank

    @property
    def rows(self) -> List[Tuple[int, Vector]]:
        return self.echelon.sorted_rows()

    def vector(self, combination: LinearCombination) -> Vector:
        result: Vector = {}
        for code, value in combination.items():
            column = self.index.get(code)
            if column is None:
                diagram = parse_diagram(code)
                raise DegreeMismatchException(
                    f"{code} has degree {diagram.degree} on {diagram.strand_count} strands, "
                    f"basis is degree {self.degree} on {self.strand_count}"
                )
            result[column] = value
        if self.ring is Ring.INTEGER and not combination.is_integral():
            raise RingMismatchException("integer basis needs integer coefficients")
        return result

    def combination(self, vector: Vector) -> LinearCombination:
        return LinearCombination({self.codes[column]: value for column, value in vector.items()})

    def reduce(self, combination: LinearCombination) -> LinearCombination:
        return self.combination(self.echelon.reduce(self.vector(combination)))

    def rational_echelon(self) -> Echelon:
        if self.ring is Ring.RATIONAL:
            return self.echelon
        echelon = Echelon(Ring.RATIONAL)
        echelon.extend(row for _, row in self.rows)
        return echelon

    def matches(self, other: "RelationBasis") -> None:
        if (self.degree, self.strand_count) != (other.degree, other.strand_count):
            raise DegreeMismatchException("bases have different degree or strand count")
        if self.ring is not other.ring:
            raise RingMismatchException(f"ring {self.ring.value} vs {other.ring.value}")


def check_degree_gate(degree: int, strand_count: int, config: RelationConfig) -> None:
    if degree >= 5 and not config.allow_degree_five:
        raise RelationException(
            f"degree {degree} bases on {strand_count} strands need ALLOW_DEGREE_FIVE=true or --allow-degree-five"
        )


def relation_basis(
    degree: int,
    strand_count: int,
    relations: RelationSet,
    ring: Ring = Ring.RATIONAL,
    config: Optional[RelationConfig] = None,
) -> RelationBasis:
    config = config or RelationConfig()
    check_degree_gate(degree, strand_count, config)
    diagrams = enumerate_diagrams(degree, strand_count, cap=config.diagram_cap)
    codes = tuple(d.code for d in diagrams)
    index = {code: i for i, code in enumerate(codes)}
    echelon = Echelon(ring)
    generated = generate_relations(degree, strand_count, relations, config.antisymmetry_sign, config.diagram_cap)
    echelon.extend({index[code]: value for code, value in relation.items()} for relation in generated)
    basis = RelationBasis(degree, strand_count, relations, ring, codes, echelon, config.antisymmetry_sign)
    logger.info(
        "relation basis built",
        extra={
            "context": {
                "degree": degree,
                "strands": strand_count,
                "relations": str(relations),
                "ring": ring.value,
                "diagrams": len(codes),
                "generators": len(generated),
                "rank": basis.rank,
            }
        },
    )
    return basis


def reduce(combination: LinearCombination, basis: RelationBasis) -> LinearCombination:
    return basis.reduce(combination)


def equal_mod(first: LinearCombination, second: LinearCombination, basis: RelationBasis) -> bool:
    return basis.reduce(first - second).is_zero()


def dimension(
    degree: int,
    strand_count: int,
    relations: RelationSet,
    config: Optional[RelationConfig] = None,
) -> int:
    return relation_basis(degree, strand_count, relations, Ring.RATIONAL, config).dimension


@dataclass(frozen=True)
class SubspaceReport:
    dimension: int
    independent: Tuple[str, ...]


def subspace_dimension(diagrams: Sequence[ChordDiagram], basis: RelationBasis) -> SubspaceReport:
    """Dimension of the image of span(diagrams) in the rational quotient, plus an independent sub-list."""
    quotient = basis.rational_echelon()
    image = Echelon(Ring.RATIONAL)
    independent: List[str] = []
    for diagram in diagrams:
        residual = quotient.reduce(basis.vector(LinearCombination.of(diagram)))
        if image.add(residual):
            independent.append(diagram.code)
    return SubspaceReport(image.rank, tuple(independent))


def rational_coordinates(combination: LinearCombination, basis: RelationBasis) -> Optional[Dict[int, Fraction]]:
    return basis.echelon.coordinates(basis.vector(combination))
