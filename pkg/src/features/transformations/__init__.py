from .boughs import BoughDecomposition, BoughInfo, decompose
from .config import OrbitConfig, load_orbit_config
from .loop import Token, diagram_from_loop, loop_tokens
from .moves import legal_permutations, marked_trunk, marked_trunks, permute_boughs, reflect_marked, slide_bough
from .orbit import MoveRecord, neighbors, orbit

__all__ = [
    "BoughDecomposition",
    "BoughInfo",
    "decompose",
    "OrbitConfig",
    "load_orbit_config",
    "Token",
    "diagram_from_loop",
    "loop_tokens",
    "legal_permutations",
    "marked_trunk",
    "marked_trunks",
    "permute_boughs",
    "reflect_marked",
    "slide_bough",
    "MoveRecord",
    "neighbors",
    "orbit",
]
