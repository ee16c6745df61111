import os
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

os.environ.setdefault("PYTHONPATH", str(ROOT))

from src.features.diagrams import parse_diagram
from src.features.graphs import parse_tree_text
from src.features.relations import RelationConfig


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: desk-scale bounds, minutes rather than seconds")


# ---------------------------------------------------------------------------
#  Shared diagrams and trees used by every test layer
# ---------------------------------------------------------------------------

# two chords on one strand whose endpoints alternate
CROSSING_PAIR = "k=1 [a b a b]"

# marked chord v with one unmarked chord on each side
STAR_1_1 = "k=2 [b v b][c v c]"

# path u{1,1} - m{1,2} - w{2,2}
PATH_TREE = """
v u 1 1
v m 1 2
v w 2 2
e u -- m
e m -- w
"""

# two marked chords sharing both colors; a directed edge is forced but missing
BROKEN_TREE = """
v x 1 2
v y 1 2
v u 1 1
e x -- u
e u -- y
"""


@pytest.fixture
def crossing_pair():
    return parse_diagram(CROSSING_PAIR)


@pytest.fixture
def star_diagram():
    return parse_diagram(STAR_1_1)


@pytest.fixture
def path_tree():
    return parse_tree_text(PATH_TREE, colors=2)


@pytest.fixture
def broken_tree():
    return parse_tree_text(BROKEN_TREE)


@pytest.fixture
def small_config():
    """Relation config for desk-scale tests; no disk cache."""
    return RelationConfig(diagram_cap=5000, torsion_column_cap=200)


@pytest.fixture
def cache_dir(tmp_path):
    path = tmp_path / "basis_cache"
    path.mkdir()
    return str(path)


@pytest.fixture
def tree_file(tmp_path):
    def _write(text: str, name: str = "tree.txt") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write
