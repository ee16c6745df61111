from abc import ABC, abstractmethod
from typing import Dict, List

from ..context import Certificate


class BaseCheck(ABC):
    """One verification harness: a list of picklable cases and a certificate per case."""

    parameters: Dict[str, object] = {}

    @property
    @abstractmethod
    def name(self) -> str:
        raise NotImplementedError

    def prepare(self) -> None:
        """Build shared state (bases, indexes) before cases are listed."""

    @abstractmethod
    def cases(self) -> List[object]:
        raise NotImplementedError

    @abstractmethod
    def run_case(self, case: object) -> Certificate:
        raise NotImplementedError

    def run_batch(self, batch: List[object]) -> List[Certificate]:
        return [self.run_case(case) for case in batch]
