import os
from pathlib import Path
from typing import Dict


def _strip_value(raw: str) -> str:
    value = raw.strip()
    if len(value) >= 2 and value[0] == value[-1] and value[0] in {'"', "'"}:
        return value[1:-1]
    # unquoted values may carry a trailing comment
    if " #" in value:
        value = value.split(" #", 1)[0].rstrip()
    return value


def load_env_file(path: str) -> Dict[str, str]:
    """Load KEY=VALUE pairs from a .env file, ignoring comments and `export` prefixes."""
    env_path = Path(path)
    if not env_path.exists():
        return {}

    values: Dict[str, str] = {}
    for line in env_path.read_text(encoding="utf-8").splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("export "):
            stripped = stripped[len("export "):].lstrip()
        if "=" not in stripped:
            continue
        key, value = stripped.split("=", 1)
        values[key.strip()] = _strip_value(value)

    return values


def apply_env(values: Dict[str, str]) -> None:
    """Apply env values only when not already set in the environment."""
    for key, value in values.items():
        if key not in os.environ:
            os.environ[key] = value
