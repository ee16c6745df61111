from .settings import ANTISYMMETRY_SIGNS, CONNECTIVITY_MODES, Settings

__all__ = ["Settings", "ANTISYMMETRY_SIGNS", "CONNECTIVITY_MODES"]
