"""Relation families, coefficient rings and formal sums of diagrams."""

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Tuple, Union

from src.core.exceptions import RelationException
from src.features.diagrams import ChordDiagram, parse_diagram

Coefficient = Union[int, Fraction]

ONE_TERM = "1t"
FOUR_TERM = "4t"
ANTISYMMETRY = "as"
RELATION_FLAGS = (ONE_TERM, FOUR_TERM, ANTISYMMETRY)

# optional sign, optional "c*", then one diagram, optionally parenthesized
_TERM_PATTERN = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?\(?\s*(k=\d+\s*(?:\[[^\]]*\]\s*)+)\)?")


@dataclass(frozen=True)
class RelationSet:
    flags: FrozenSet[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "flags", frozenset(self.flags))
        unknown = sorted(self.flags - set(RELATION_FLAGS))
        if unknown:
            raise RelationException(f"unknown relation flags {unknown}; use {', '.join(RELATION_FLAGS)}")

    @classmethod
    def parse(cls, text: str) -> "RelationSet":
        flags = frozenset(part.strip().lower() for part in text.split(",") if part.strip())
        return cls(flags)

    def __contains__(self, flag: str) -> bool:
        return flag in self.flags

    def __bool__(self) -> bool:
        return bool(self.flags)

    @property
    def key(self) -> str:
        return "+".join(flag for flag in RELATION_FLAGS if flag in self.flags) or "none"

    def __str__(self) -> str:
        return ",".join(flag for flag in RELATION_FLAGS if flag in self.flags)


DEFAULT_RELATIONS = RelationSet(frozenset({ONE_TERM, FOUR_TERM}))


class Ring(str, Enum):
    RATIONAL = "q"
    INTEGER = "z"

    @classmethod
    def parse(cls, text: str) -> "Ring":
        try:
            return cls(text.strip().lower())
        except ValueError as exc:
            raise RelationException(f"ring must be q or z, got {text!r}") from exc


def format_coefficient(value: Coefficient) -> Union[int, str]:
    """Integers stay integers; other rationals become "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


class LinearCombination:
    """Finite sum of diagrams keyed by canonical code; zero coefficients are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[str, Coefficient] = None) -> None:
        cleaned: Dict[str, Coefficient] = {}
        for code, value in (terms or {}).items():
            if value:
                cleaned[code] = _simplify(value)
        self._terms = dict(sorted(cleaned.items()))

    @classmethod
    def of(cls, diagram: ChordDiagram, coefficient: Coefficient = 1) -> "LinearCombination":
        return cls({diagram.code: coefficient})

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[Coefficient, ChordDiagram]]) -> "LinearCombination":
        total: Dict[str, Coefficient] = {}
        for coefficient, diagram in terms:
            total[diagram.code] = total.get(diagram.code, 0) + coefficient
        return cls(total)

    @classmethod
    def parse(cls, text: str) -> "LinearCombination":
        """Single diagram, or a sum like `k=1 [a b b a] - k=1 [a a b b]` with optional integer coefficients."""
        terms = []
        for sign, coefficient, body in _split_terms(text):
            terms.append((sign * coefficient, parse_diagram(body)))
        return cls.from_terms(terms)

    def items(self) -> Iterator[Tuple[str, Coefficient]]:
        return iter(self._terms.items())

    @property
    def codes(self) -> Tuple[str, ...]:
        return tuple(self._terms)

    def coefficient(self, code: str) -> Coefficient:
        return self._terms.get(code, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        total = dict(self._terms)
        for code, value in other.items():
            total[code] = total.get(code, 0) + value
        return LinearCombination(total)

    def __neg__(self) -> "LinearCombination":
        return LinearCombination({code: -value for code, value in self._terms.items()})

    def __sub__(self, other: "LinearCombination") -> "LinearCombination":
        return self + (-other)

    def __rmul__(self, scalar: Coefficient) -> "LinearCombination":
        return LinearCombination({code: scalar * value for code, value in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearCombination) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def normalized(self) -> "LinearCombination":
        """Sign fixed so the first coefficient in code order is positive."""
        if self._terms and next(iter(self._terms.values())) < 0:
            return -self
        return self

    def is_integral(self) -> bool:
        return all(Fraction(value).denominator == 1 for value in self._terms.values())

    def to_dict(self) -> Dict[str, Union[int, str]]:
        return {code: format_coefficient(value) for code, value in self._terms.items()}

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for code, value in self._terms.items():
            sign = "-" if value < 0 else "+"
            magnitude = abs(value)
            text = code if magnitude == 1 else f"{format_coefficient(magnitude)}*({code})"
            parts.append(f"{sign} {text}")
        joined = " ".join(parts)
        return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]

    def __repr__(self) -> str:
        return f"LinearCombination({self._terms!r})"


def _simplify(value: Coefficient) -> Coefficient:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def _split_terms(text: str) -> Iterator[Tuple[int, int, str]]:
    position = 0
    stripped = text.strip()
    if not stripped:
        raise RelationException("empty linear combination")
    while position < len(stripped):
        match = _TERM_PATTERN.match(stripped, position)
        if not match or match.end() == position:
            raise RelationException(f"cannot parse linear combination near {stripped[position:]!r}")
        sign = -1 if match.group(1) == "-" else 1
        coefficient = int(match.group(2)) if match.group(2) else 1
        yield sign, coefficient, match.group(3).strip()
        position = match.end()
