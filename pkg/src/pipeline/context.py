from dataclasses import dataclass, field
from typing import Dict, List


@dataclass(frozen=True)
class Certificate:
    """Outcome of one verification case, kept so failures stay auditable."""

    case: str
    passed: bool
    detail: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, object]:
        return {"case": self.case, "passed": self.passed, "detail": self.detail}


@dataclass
class VerificationContext:
    check: str
    parameters: Dict[str, object] = field(default_factory=dict)
    certificates: List[Certificate] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)

    def add_certificate(self, certificate: Certificate) -> None:
        self.certificates.append(certificate)

    def add_error(self, stage: str, message: str) -> None:
        self.errors.append(f"{stage}: {message}")

    def has_errors(self) -> bool:
        return len(self.errors) > 0

    @property
    def failures(self) -> List[Certificate]:
        return [c for c in self.certificates if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.has_errors() and not self.failures

    def sort_certificates(self) -> None:
        self.certificates.sort(key=lambda c: c.case)

    def to_dict(self) -> Dict[str, object]:
        return {
            "check": self.check,
            "parameters": self.parameters,
            "cases": len(self.certificates),
            "failures": len(self.failures),
            "passed": self.passed,
            "errors": list(self.errors),
            "certificates": [c.to_dict() for c in self.certificates],
        }
