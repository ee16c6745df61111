from .base import BaseCheck
from .centrality import CentralityCheck
from .collapse import ClassCollapseCheck
from .common import BasisProvider, difference, tree_classes
from .gen4t import GeneralizedFourTermCheck
from .orbits import OrbitClassCheck
from .shares import ShareDualityCheck
from .simple import ShareChordCheck
from .slides import SlideInvarianceCheck
from .torsion import TorsionCheck
from .treeclass import TreeClassCheck

__all__ = [
    "BaseCheck",
    "BasisProvider",
    "difference",
    "tree_classes",
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
