# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

from itertools import combinations

import pytest

from hypothesis import given, strategies as st

from cospectra.cotree import cotree_to_graph
from cospectra.graph import (complement_of, eliminate_twins, find_induced_p4, find_twin_pair, Graph, is_induced_p4,
                             join_of, random_graph, random_threshold_graph, threshold_graph, TwinKind, union_of)
from cospectra.recognize import graph_to_cotree, P4Witness


def path(n):
    return Graph(n, ((v, v + 1) for v in range(1, n)))


def complete(n):
    return Graph(n, combinations(range(1, n + 1), 2))


c4 = Graph(4, [(1, 3), (1, 4), (2, 3), (2, 4)])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    return Graph(n, [pair for pair, bit in zip(pairs, draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))) if bit])


@pytest.mark.parametrize('n, edges, error', [
    (2, [(1, 1)], 'Self-loop'),
    (2, [(1, 3)], 'out of the vertex range'),
    (-1, [], 'non-negative'),
])
def test_invalid_graph(n, edges, error):
    with pytest.raises(ValueError, match=error):
        Graph(n, edges)


def test_graph_basics():
    g = Graph(4, [(2, 1), (1, 2), (3, 2)])
    assert g.edges == ((1, 2), (2, 3))
    assert g.neighbors(2) == {1, 3}
    assert g.degree(4) == 0
    assert not g.is_connected()
    assert g == Graph(4, [(1, 2), (2, 3)])
    assert hash(g) == hash(Graph(4, [(1, 2), (2, 3)]))


def test_union_join_complement():
    k1 = Graph(1)
    assert join_of(k1, k1) == complete(2)
    assert union_of(k1, k1) == Graph(2)
    assert join_of(Graph(2), Graph(2)) == c4
    assert complement_of(c4) == Graph(4, [(1, 2), (3, 4)])
    assert complement_of(complete(5)) == Graph(5)


@pytest.mark.parametrize('g, expected', [
    (path(3), (1, 3, TwinKind.FALSE_TWIN)),
    (complete(3), (1, 2, TwinKind.TRUE_TWIN)),
    (c4, (1, 2, TwinKind.FALSE_TWIN)),
    (Graph(2), (1, 2, TwinKind.FALSE_TWIN)),
    (path(4), None),
    (path(5), None),
])
def test_find_twin_pair(g, expected):
    assert find_twin_pair(g) == expected


def test_find_twin_pair_single_vertex():
    with pytest.raises(ValueError):
        find_twin_pair(Graph(1))


@pytest.mark.parametrize('g, expected', [
    (path(4), (1, 2, 3, 4)),
    (path(5), (1, 2, 3, 4)),
    (Graph(4, [(1, 2), (2, 4), (3, 4)]), (1, 2, 4, 3)),
    (c4, None),
    (complete(4), None),
    (Graph(1), None),
])
def test_find_induced_p4(g, expected):
    assert find_induced_p4(g) == expected


@pytest.mark.parametrize('quad, expected', [
    ((1, 2, 3, 4), True),
    ((4, 3, 2, 1), True),
    ((1, 3, 2, 4), False),
    ((1, 2, 3, 3), False),
    ((1, 2, 3, 5), False),
])
def test_is_induced_p4(quad, expected):
    assert is_induced_p4(path(4), quad) is expected


def test_eliminate_twins_p4():
    assert eliminate_twins(path(4)) == ([1, 2, 3, 4], [], (1, 2, 3, 4))


def test_eliminate_twins_c4():
    survivors, eliminations, witness = eliminate_twins(c4)
    assert survivors == [1]
    assert eliminations == [(2, 1, TwinKind.FALSE_TWIN), (4, 3, TwinKind.FALSE_TWIN), (3, 1, TwinKind.TRUE_TWIN)]
    assert witness is None


@given(graphs())
def test_twin_elimination_decides_cographs(g):
    _, _, witness = eliminate_twins(g)
    assert (witness is None) == (find_induced_p4(g) is None)
    if witness is not None:
        assert is_induced_p4(g, witness)


@pytest.mark.parametrize('p', [0.2, 0.5, 0.8])
def test_recognition_agrees_with_brute_force(p):
    disagreements = 0
    for seed in range(3334):
        g = random_graph(1 + seed % 8, p, seed)
        result = graph_to_cotree(g)
        if isinstance(result, P4Witness) != (find_induced_p4(g) is not None):
            disagreements += 1
        elif isinstance(result, P4Witness) and not result.verify(g):
            disagreements += 1
        elif not isinstance(result, P4Witness) and cotree_to_graph(result) != g:
            disagreements += 1
    assert disagreements == 0


@given(graphs(), graphs())
def test_de_morgan(g1, g2):
    assert complement_of(union_of(g1, g2)) == join_of(complement_of(g1), complement_of(g2))
    assert complement_of(join_of(g1, g2)) == union_of(complement_of(g1), complement_of(g2))


@pytest.mark.parametrize('seed', range(30))
def test_complement_is_involution(seed):
    g = random_graph(seed % 15, (seed % 10) / 9, seed)
    assert complement_of(complement_of(g)) == g


@given(graphs())
def test_complement_preserves_cographs(g):
    assert (find_induced_p4(g) is None) == (find_induced_p4(complement_of(g)) is None)


@pytest.mark.parametrize('sequence, edges', [
    ('i', []),
    ('id', [(1, 2)]),
    ('idd', [(1, 2), (1, 3), (2, 3)]),
    ('iid', [(1, 3), (2, 3)]),
    ('did', [(1, 3), (2, 3)]),
])
def test_threshold_graph(sequence, edges):
    assert threshold_graph(sequence) == Graph(len(sequence), edges)


@pytest.mark.parametrize('sequence', ['', 'ix', 'IDD'])
def test_threshold_graph_invalid(sequence):
    with pytest.raises(ValueError):
        threshold_graph(sequence)


@pytest.mark.parametrize('seed', range(20))
def test_random_threshold_graph_is_cograph(seed):
    g = random_threshold_graph(12, seed)
    assert g.n == 12
    assert find_induced_p4(g) is None


def test_random_graph_is_seeded():
    assert random_graph(8, 0.5, 7) == random_graph(8, 0.5, 7)
    assert random_graph(6, 0.0, 1) == Graph(6)
    assert random_graph(6, 1.0, 1) == complete(6)
