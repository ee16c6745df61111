import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .env_loader import apply_env, load_env_file

ANTISYMMETRY_SIGNS = ("parity", "plus", "minus")
CONNECTIVITY_MODES = ("reduced", "raw")


def _env_flag(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in {"1", "true", "yes", "on"}


@dataclass(frozen=True)
class Settings:
    log_level: str
    log_file: str
    max_workers: int
    diagram_cap: int
    orbit_cap: int
    torsion_column_cap: int
    cache_dir: str
    antisymmetry_sign: str
    connectivity: str
    allow_degree_five: bool

    @classmethod
    def load(cls, env_path: Optional[str] = None) -> "Settings":
        if env_path:
            apply_env(load_env_file(env_path))
        elif Path(".env").exists():
            apply_env(load_env_file(".env"))

        base_dir = Path(os.getcwd())
        data_dir = base_dir / "data"

        antisymmetry_sign = os.getenv("ANTISYMMETRY_SIGN", "parity").lower()
        if antisymmetry_sign not in ANTISYMMETRY_SIGNS:
            raise ValueError(f"ANTISYMMETRY_SIGN must be one of {ANTISYMMETRY_SIGNS}: {antisymmetry_sign}")
        connectivity = os.getenv("CONNECTIVITY_MODE", "reduced").lower()
        if connectivity not in CONNECTIVITY_MODES:
            raise ValueError(f"CONNECTIVITY_MODE must be one of {CONNECTIVITY_MODES}: {connectivity}")

        return cls(
            log_level=os.getenv("LOG_LEVEL", "INFO"),
            log_file=os.getenv("LOG_FILE", str(base_dir / "logs" / "chord_toolkit.log")),
            max_workers=int(os.getenv("MAX_WORKERS", (os.cpu_count() or 2) - 1 or 1)),
            diagram_cap=int(os.getenv("DIAGRAM_CAP", "20000")),
            orbit_cap=int(os.getenv("ORBIT_CAP", "100000")),
            torsion_column_cap=int(os.getenv("TORSION_COLUMN_CAP", "400")),
            cache_dir=os.getenv("BASIS_CACHE_DIR", str(data_dir / "basis_cache")),
            antisymmetry_sign=antisymmetry_sign,
            connectivity=connectivity,
            allow_degree_five=_env_flag("ALLOW_DEGREE_FIVE"),
        )
