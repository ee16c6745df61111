"""Torsion of the integral quotient via invariant factors of the relation lattice."""

from dataclasses import dataclass
from math import lcm
from typing import List, Optional, Tuple

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors

from src.core.exceptions import CapExceededException, DegreeMismatchException, RingMismatchException
from src.core.logging import get_logger

from .basis import RelationBasis, relation_basis
from .config import RelationConfig
from .elimination import Echelon, Vector
from .model import LinearCombination, RelationSet, Ring

logger = get_logger("relations.torsion")


@dataclass(frozen=True)
class TorsionReport:
    degree: int
    strand_count: int
    relations: RelationSet
    factors: Tuple[int, ...]
    rank: int
    residual_columns: int

    @property
    def torsion_free(self) -> bool:
        return not self.factors


def _split_unit_rows(echelon: Echelon) -> Tuple[Echelon, List[Vector]]:
    units = Echelon(Ring.INTEGER)
    others: List[Vector] = []
    for pivot, row in echelon.sorted_rows():
        if row[pivot] == 1:
            units.rows[pivot] = dict(row)
        else:
            others.append(dict(row))
    return units, others


def lattice_invariants(basis: RelationBasis, column_cap: int) -> Tuple[Tuple[int, ...], int]:
    """Invariant factors > 1 of the integer row lattice, and the residual column count."""
    if basis.ring is not Ring.INTEGER:
        raise RingMismatchException("torsion needs an integer basis")
    units, others = _split_unit_rows(basis.echelon)
    # once the other rows vanish in unit pivot columns, each unit row is a factor 1
    residual_rows = []
    for row in others:
        residual = units.reduce(row)
        residual_rows.append({c: v for c, v in residual.items() if c not in units.rows})
    columns = sorted({c for row in residual_rows for c in row})
    if len(columns) > column_cap:
        raise CapExceededException("torsion residual columns", len(columns), column_cap)
    if not residual_rows or not columns:
        return (), len(columns)
    position = {c: i for i, c in enumerate(columns)}
    dense = [[0] * len(columns) for _ in residual_rows]
    for i, row in enumerate(residual_rows):
        for column, value in row.items():
            dense[i][position[column]] = int(value)
    factors = invariant_factors(Matrix(dense), domain=ZZ)
    return tuple(sorted(abs(int(f)) for f in factors if abs(int(f)) > 1)), len(columns)


def torsion_invariants(
    degree: int,
    strand_count: int,
    relations: RelationSet,
    config: Optional[RelationConfig] = None,
) -> TorsionReport:
    config = config or RelationConfig()
    basis = relation_basis(degree, strand_count, relations, Ring.INTEGER, config)
    factors, residual_columns = lattice_invariants(basis, config.torsion_column_cap)
    logger.info(
        "torsion computed",
        extra={"context": {"degree": degree, "strands": strand_count, "factors": list(factors)}},
    )
    return TorsionReport(degree, strand_count, relations, factors, basis.rank, residual_columns)


def element_order(
    combination: LinearCombination,
    integer_basis: RelationBasis,
    rational_basis: Optional[RelationBasis] = None,
) -> Optional[int]:
    """Additive order in the integral quotient: 1 for zero, None when infinite."""
    if integer_basis.ring is not Ring.INTEGER:
        raise RingMismatchException("element order needs an integer basis")
    if rational_basis is not None:
        if (rational_basis.degree, rational_basis.strand_count) != (integer_basis.degree, integer_basis.strand_count):
            raise DegreeMismatchException("rational and integer bases differ in degree or strand count")
        if not rational_basis.reduce(combination).is_zero():
            return None
    coordinates = integer_basis.echelon.coordinates(integer_basis.vector(combination))
    if coordinates is None:
        return None
    order = 1
    for value in coordinates.values():
        order = lcm(order, value.denominator)
    return order
