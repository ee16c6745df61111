from dataclasses import dataclass

from src.core.config import Settings


@dataclass(frozen=True)
class RelationConfig:
    diagram_cap: int = 20000
    torsion_column_cap: int = 400
    antisymmetry_sign: str = "parity"
    allow_degree_five: bool = False
    cache_dir: str = ""


def load_relation_config(settings: Settings) -> RelationConfig:
    return RelationConfig(
        diagram_cap=settings.diagram_cap,
        torsion_column_cap=settings.torsion_column_cap,
        antisymmetry_sign=settings.antisymmetry_sign,
        allow_degree_five=settings.allow_degree_five,
        cache_dir=settings.cache_dir,
    )
