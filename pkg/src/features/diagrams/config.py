from dataclasses import dataclass

from src.core.config import Settings


@dataclass(frozen=True)
class DiagramConfig:
    diagram_cap: int = 20000
    connectivity: str = "reduced"


def load_diagram_config(settings: Settings) -> DiagramConfig:
    return DiagramConfig(
        diagram_cap=settings.diagram_cap,
        connectivity=settings.connectivity,
    )
