"""Sparse row echelon forms over Q and Z.

Rows are dicts column -> coefficient. Each stored row is keyed by its pivot (smallest
column) and only has support at or after it. Over Q pivots are 1; over Z rows are
combined with extended-gcd steps so the stored rows stay a lattice basis.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from sympy import GF
from sympy.polys.matrices import DomainMatrix

from .model import Coefficient, Ring

Vector = Dict[int, Coefficient]

MODULAR_PRIME = 2147483647


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, s, t) with g = s*a + t*b and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def combine(first: Vector, a: Coefficient, second: Vector, b: Coefficient) -> Vector:
    """a*first + b*second with zeros dropped."""
    result: Vector = {}
    for column, value in first.items():
        result[column] = a * value
    for column, value in second.items():
        result[column] = result.get(column, 0) + b * value
    return {column: value for column, value in result.items() if value}


def sort_key(vector: Vector) -> Tuple:
    columns = sorted(vector)
    return (tuple(columns), tuple(vector[c] for c in columns))


class Echelon:
    def __init__(self, ring: Ring) -> None:
        self.ring = ring
        self.rows: Dict[int, Vector] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, vector: Vector) -> bool:
        """Insert a row; returns whether the rank grew (Q) or the lattice changed (Z)."""
        vector = {c: (Fraction(v) if self.ring is Ring.RATIONAL else int(v)) for c, v in vector.items() if v}
        changed = False
        while vector:
            pivot = min(vector)
            existing = self.rows.get(pivot)
            if existing is None:
                self.rows[pivot] = self._normalize(vector, pivot)
                return True
            if self.ring is Ring.RATIONAL:
                vector = combine(vector, 1, existing, -vector[pivot])
                continue
            a, b = existing[pivot], vector[pivot]
            if b % a == 0:
                vector = combine(vector, 1, existing, -(b // a))
                continue
            g, s, t = extended_gcd(a, b)
            self.rows[pivot] = combine(existing, s, vector, t)
            vector = combine(existing, b // g, vector, -(a // g))
            changed = True
        return changed

    def extend(self, vectors: Iterable[Vector]) -> None:
        for vector in sorted(vectors, key=sort_key):
            self.add(vector)

    def _normalize(self, vector: Vector, pivot: int) -> Vector:
        lead = vector[pivot]
        if self.ring is Ring.RATIONAL:
            return {c: v / lead for c, v in vector.items()}
        if lead < 0:
            return {c: -v for c, v in vector.items()}
        return vector

    def reduce(self, vector: Vector) -> Vector:
        """Canonical representative of vector modulo the row space (Q) or lattice (Z)."""
        residual = {c: v for c, v in vector.items() if v}
        done = set()
        while True:
            pending = [c for c in residual if c in self.rows and c not in done]
            if not pending:
                return residual
            column = min(pending)
            done.add(column)
            row = self.rows[column]
            if self.ring is Ring.RATIONAL:
                factor = residual[column]
            else:
                factor = residual[column] // row[column]
            if factor:
                residual = combine(residual, 1, row, -factor)

    def coordinates(self, vector: Vector) -> Optional[Dict[int, Fraction]]:
        """Rational coefficients of vector in terms of the stored rows, or None outside their span."""
        residual = {c: Fraction(v) for c, v in vector.items() if v}
        solution: Dict[int, Fraction] = {}
        while residual:
            column = min(residual)
            row = self.rows.get(column)
            if row is None:
                return None
            factor = residual[column] / row[column]
            solution[column] = factor
            residual = combine(residual, 1, row, -factor)
        return solution

    def sorted_rows(self) -> List[Tuple[int, Vector]]:
        return sorted(self.rows.items())


def modular_rank(vectors: Iterable[Vector], width: int, prime: int = MODULAR_PRIME) -> int:
    """Rank of integer rows over GF(prime); never above their rank over Q."""
    field = GF(prime)
    rows: Dict[int, Dict[int, object]] = {}
    for vector in vectors:
        entries = {c: field.convert(int(v)) for c, v in vector.items() if int(v) % prime}
        if entries:
            rows[len(rows)] = entries
    if not rows:
        return 0
    return DomainMatrix(rows, (len(rows), width), field).rank()
