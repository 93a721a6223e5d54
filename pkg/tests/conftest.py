"""Shared fixtures: the seven-element, three-set worked example."""

from pathlib import Path

import numpy as np
import pytest

from core import parse_scp
from quantum import lift
from sampler import prepare
from solver import build_matrix

DATA_DIR = Path(__file__).parent.parent / 'data'

WORKED_EXAMPLE = """\
universe: a b c d e f g
sets: X Y Z
X \\ Y = {a, d}
X \\ Z = {d}
Y \\ X = {b, f}
Z \\ X = {b}
Z \\ Y = {a}
c !in X
e in Z
"""

# rows a..g, columns X Y Z
WORKED_MATRIX = np.array([
    [1, -1, 1],
    [-1, 1, 1],
    [-1, 0, 0],
    [1, -1, -1],
    [0, 0, 1],
    [-1, 1, 0],
    [0, 0, 0],
], dtype=np.int8)

WORKED_UNCERTAIN = [
    ('c', 'Y'), ('c', 'Z'),
    ('e', 'X'), ('e', 'Y'),
    ('f', 'Z'),
    ('g', 'X'), ('g', 'Y'), ('g', 'Z'),
]


@pytest.fixture
def worked_source():
    return WORKED_EXAMPLE


@pytest.fixture
def worked_instance():
    return parse_scp(WORKED_EXAMPLE)


@pytest.fixture
def worked_matrix(worked_instance):
    return build_matrix(worked_instance)


@pytest.fixture
def worked_register(worked_matrix):
    return prepare(lift(worked_matrix))


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def write_scp(tmp_path):
    """Write a DSL document to a temporary file and return its path."""

    def _write(source, name='instance.scp'):
        path = tmp_path / name
        path.write_text(source, encoding='utf-8')
        return str(path)

    return _write
