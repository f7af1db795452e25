from __future__ import annotations

import sys
from pathlib import Path

import pytest

# make the suite runnable from a fresh checkout: oracles.py beside the
# tests, the package from src/ when it is not installed
sys.path.insert(0, str(Path(__file__).parent))
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from pathdraw import DiGraph, PathDecomposition


@pytest.fixture
def chain3() -> DiGraph:
    return DiGraph.build(3, [(0, 1), (1, 2)])


@pytest.fixture
def diamond() -> DiGraph:
    return DiGraph.build(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@pytest.fixture
def diamond_paths() -> PathDecomposition:
    return PathDecomposition(((0, 1, 3), (2,)))
