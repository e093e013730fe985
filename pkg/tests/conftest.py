import functools
from pathlib import Path

import pytest

from fanheavy.graph import Graph
from fanheavy.graphio import decode_graph6

DATA = Path(__file__).parent / "data"

# number of graphs / 2-connected graphs per vertex count, one per
# isomorphism class (OEIS A000088 / A002218)
GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
TWO_CONNECTED_COUNTS = {3: 1, 4: 3, 5: 10, 6: 56, 7: 468, 8: 7123}


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def k23() -> Graph:
    return Graph(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)])


@functools.cache
def _reps(n: int) -> tuple[Graph, ...]:
    if n == 8:
        lines = (DATA / "graphs8_reduced.g6").read_text().splitlines()
        graphs = tuple(decode_graph6(s) for s in lines)
    else:
        from fanheavy.generate import nonisomorphic_graphs
        graphs = tuple(nonisomorphic_graphs(n))
    assert len(graphs) == GRAPH_COUNTS[n]
    return graphs


@pytest.fixture(scope="session")
def reps7() -> tuple[Graph, ...]:
    return _reps(7)


@pytest.fixture(scope="session")
def reps8() -> tuple[Graph, ...]:
    return _reps(8)


@pytest.fixture(scope="session")
def two_connected_by_n() -> dict[int, list[Graph]]:
    """2-connected representatives for 3 <= n <= 8, counts cross-checked."""
    out = {}
    for n in range(3, 9):
        out[n] = [g for g in _reps(n) if g.is_two_connected()]
        assert len(out[n]) == TWO_CONNECTED_COUNTS[n]
    return out
