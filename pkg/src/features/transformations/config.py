from dataclasses import dataclass

from src.core.config import Settings


@dataclass(frozen=True)
class OrbitConfig:
    orbit_cap: int = 100000
    # end-to-end slides are already among the bough permutations
    include_slides: bool = False


def load_orbit_config(settings: Settings) -> OrbitConfig:
    return OrbitConfig(orbit_cap=settings.orbit_cap)
