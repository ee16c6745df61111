from .checks import (
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
)
from .context import Certificate, VerificationContext
from .orchestrator import VerificationRunner

__all__ = [
    "Certificate",
    "VerificationContext",
    "VerificationRunner",
    "BaseCheck",
    "ClassCollapseCheck",
    "ShareDualityCheck",
    "OrbitClassCheck",
    "CentralityCheck",
    "GeneralizedFourTermCheck",
    "ShareChordCheck",
    "SlideInvarianceCheck",
    "TreeClassCheck",
    "TorsionCheck",
]
