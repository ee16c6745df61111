from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, Tuple

from ..model import IntersectionGraph, VertexId


@dataclass(frozen=True)
class Violation:
    condition: int
    vertices: Tuple[VertexId, ...]
    detail: str


class BaseCondition(ABC):
    """One necessary and sufficient condition for a colored tree to be an intersection graph."""

    #: conditions that do not look at color values are checked once, not per relabeling
    depends_on_coloring: bool = False

    @property
    @abstractmethod
    def number(self) -> int:
        raise NotImplementedError

    @property
    @abstractmethod
    def description(self) -> str:
        raise NotImplementedError

    @abstractmethod
    def check(self, tree: IntersectionGraph, colors: int) -> List[Violation]:
        raise NotImplementedError

    def violation(self, vertices, detail: str) -> Violation:
        return Violation(self.number, tuple(vertices), detail)
