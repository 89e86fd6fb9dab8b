import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tgreach.core import TemporalGraph, parse_temporal_graph  # noqa: E402

SQUARE_TEXT = "n 4\n0 1 1\n1 2 2\n2 3 1\n3 0 2"
# a b c d e f -> 0..5
FIG2_EDGES = {(0, 1): [1, 9], (1, 2): [2, 8], (2, 3): [3, 7], (3, 4): [6], (4, 1): [5, 10], (1, 5): [4, 11]}
A, B, C, D, E, F = range(6)


@pytest.fixture
def square() -> TemporalGraph:
    return parse_temporal_graph(SQUARE_TEXT)


@pytest.fixture
def fig2() -> TemporalGraph:
    return TemporalGraph(6, FIG2_EDGES)
