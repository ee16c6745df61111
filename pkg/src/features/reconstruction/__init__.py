from .multi_strand import Piece, reconstruct_nstrand, stacking_order
from .roundtrip import reconstruct, round_trip_check
from .two_strand import check_two_strand, reconstruct_2strand

__all__ = [
    "Piece",
    "reconstruct_nstrand",
    "stacking_order",
    "reconstruct",
    "round_trip_check",
    "check_two_strand",
    "reconstruct_2strand",
]
