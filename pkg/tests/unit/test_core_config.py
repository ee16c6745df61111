import dataclasses
import os
from unittest.mock import patch

import pytest

from src.core.config.settings import Settings
from src.features.diagrams import load_diagram_config
from src.features.relations import load_relation_config
from src.features.transformations import load_orbit_config


def test_settings_load_defaults():
    # Clear env vars to test defaults
    with patch.dict(os.environ, {}, clear=True):
        settings = Settings.load()
        assert settings.log_level == "INFO"
        assert settings.diagram_cap == 20000
        assert settings.orbit_cap == 100000
        assert settings.torsion_column_cap == 400
        assert settings.antisymmetry_sign == "parity"
        assert settings.connectivity == "reduced"
        assert settings.allow_degree_five is False


def test_settings_load_from_env():
    env_vars = {
        "LOG_LEVEL": "DEBUG",
        "DIAGRAM_CAP": "500",
        "ORBIT_CAP": "50",
        "CONNECTIVITY_MODE": "raw",
        "ALLOW_DEGREE_FIVE": "yes",
    }
    with patch.dict(os.environ, env_vars, clear=True):
        settings = Settings.load()
        assert settings.log_level == "DEBUG"
        assert settings.diagram_cap == 500
        assert settings.orbit_cap == 50
        assert settings.connectivity == "raw"
        assert settings.allow_degree_five is True


def test_settings_load_from_explicit_env_file(tmp_path):
    env_file = tmp_path / ".env.test"
    env_file.write_text("LOG_LEVEL=WARNING\nTORSION_COLUMN_CAP=150\n")
    with patch.dict(os.environ, {}, clear=True):
        settings = Settings.load(env_path=str(env_file))
        assert settings.log_level == "WARNING"
        assert settings.torsion_column_cap == 150


def test_settings_max_workers_from_env():
    with patch.dict(os.environ, {"MAX_WORKERS": "4"}, clear=True):
        settings = Settings.load()
        assert settings.max_workers == 4


@pytest.mark.parametrize("name,value", [("ANTISYMMETRY_SIGN", "sideways"), ("CONNECTIVITY_MODE", "loose")])
def test_settings_reject_unknown_modes(name, value):
    with patch.dict(os.environ, {name: value}, clear=True):
        with pytest.raises(ValueError):
            Settings.load()


def test_settings_immutability():
    with patch.dict(os.environ, {}, clear=True):
        settings = Settings.load()
        with pytest.raises(dataclasses.FrozenInstanceError):
            settings.log_level = "CRITICAL"


def test_default_cache_dir_under_data():
    with patch.dict(os.environ, {}, clear=True):
        settings = Settings.load()
        assert "data" in settings.cache_dir


def test_feature_configs_follow_settings():
    env_vars = {"DIAGRAM_CAP": "123", "ORBIT_CAP": "45", "ANTISYMMETRY_SIGN": "minus", "BASIS_CACHE_DIR": "/tmp/bases"}
    with patch.dict(os.environ, env_vars, clear=True):
        settings = Settings.load()

    relation_config = load_relation_config(settings)
    assert relation_config.diagram_cap == 123
    assert relation_config.antisymmetry_sign == "minus"
    assert relation_config.cache_dir == "/tmp/bases"
    assert load_orbit_config(settings).orbit_cap == 45
    assert load_diagram_config(settings).diagram_cap == 123
