"""Long exhaustive runs, excluded from the default suite.

Run with: pytest -m slow tests/test_slow_exhaustive.py -v -s
"""

import pytest

from fanheavy.conditions import satisfies_fan, theorem4_condition, theorem5_condition
from fanheavy.cycles import find_hamilton_cycle
from fanheavy.generate import nonisomorphic_graphs, two_connected_labeled
from fanheavy.graphio import encode_graph6

from conftest import DATA, GRAPH_COUNTS

pytestmark = pytest.mark.slow


@pytest.mark.parametrize("hypothesis", [satisfies_fan, theorem4_condition,
                                        theorem5_condition])
def test_theorems_on_all_labeled_7_vertex_graphs(hypothesis):
    # the bitmask enumerator, unreduced: 2^21 graphs
    bad = []
    for g in two_connected_labeled(7):
        if hypothesis(g).verdict and find_hamilton_cycle(g) is None:
            bad.append(encode_graph6(g))
    assert bad == []


def test_regenerate_8_vertex_fixture_matches():
    # the checked-in corpus is exactly what the generator produces
    reps = nonisomorphic_graphs(8)
    assert len(reps) == GRAPH_COUNTS[8]
    expected = (DATA / "graphs8_reduced.g6").read_text().splitlines()
    assert [encode_graph6(g) for g in reps] == expected
