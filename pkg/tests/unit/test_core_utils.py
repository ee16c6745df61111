import json

import pytest
from unittest.mock import Mock, patch

from src.core.exceptions import ChordToolkitException, DiagramException, TreeFormatException
from src.core.utils.file_utils import atomic_write_json, ensure_directory
from src.core.utils.retry import retry_on_exception
from src.core.utils.validation import validate_file_exists, validate_non_negative, validate_positive


def test_retry_success():
    mock_func = Mock(return_value="success")
    decorated = retry_on_exception(max_attempts=3)(mock_func)
    assert decorated() == "success"
    assert mock_func.call_count == 1


def test_retry_failure_then_success():
    mock_func = Mock(side_effect=[ValueError("Fail"), "Success"])
    decorated = retry_on_exception(max_attempts=3)(mock_func)

    # Mock time.sleep to speed up test
    with patch("time.sleep"):
        result = decorated()

    assert result == "Success"
    assert mock_func.call_count == 2


def test_retry_max_attempts_exceeded():
    mock_func = Mock(side_effect=ValueError("Fail"))
    decorated = retry_on_exception(max_attempts=2)(mock_func)

    with patch("time.sleep"):
        with pytest.raises(ValueError):
            decorated()

    assert mock_func.call_count == 2


def test_retry_ignores_other_exception_types():
    mock_func = Mock(side_effect=KeyError("no retry"))
    decorated = retry_on_exception(max_attempts=3, exceptions=(TimeoutError,))(mock_func)

    with pytest.raises(KeyError):
        decorated()

    assert mock_func.call_count == 1


def test_ensure_directory(tmp_path):
    target = tmp_path / "subdir" / "nested"
    ensure_directory(str(target))
    assert target.exists()
    assert target.is_dir()


def test_validate_file_exists(tmp_path):
    present = tmp_path / "tree.txt"
    present.touch()
    validate_file_exists(str(present))
    with pytest.raises(ChordToolkitException):
        validate_file_exists(str(tmp_path / "missing.txt"))
    with pytest.raises(TreeFormatException, match="File not found"):
        validate_file_exists(str(tmp_path / "missing.txt"), TreeFormatException)


def test_validate_counts():
    validate_positive("degree", 1)
    validate_non_negative("leaves", 0)
    with pytest.raises(DiagramException, match="degree must be >= 1"):
        validate_positive("degree", 0, DiagramException)
    with pytest.raises(ChordToolkitException):
        validate_non_negative("leaves", -1)


def test_atomic_write_json_creates_valid_json(tmp_path):
    output = tmp_path / "data.json"
    payload = {"key": "value", "nested": [1, 2, 3]}

    atomic_write_json(str(output), payload)

    assert json.loads(output.read_text(encoding="utf-8")) == payload


def test_atomic_write_json_replaces_existing(tmp_path):
    output = tmp_path / "data.json"
    output.write_text('{"old": true}', encoding="utf-8")

    atomic_write_json(str(output), {"new": True})

    assert json.loads(output.read_text(encoding="utf-8")) == {"new": True}


def test_atomic_write_no_temp_file_left(tmp_path):
    output = tmp_path / "data.json"
    atomic_write_json(str(output), {"k": "v"})

    assert [p.name for p in tmp_path.iterdir()] == ["data.json"]


def test_atomic_write_cleans_up_on_failure(tmp_path):
    output = tmp_path / "data.json"

    with pytest.raises(TypeError):
        atomic_write_json(str(output), {"bad": object()})

    assert list(tmp_path.iterdir()) == []
