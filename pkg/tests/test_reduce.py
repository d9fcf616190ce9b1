# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import pytest

from picire import Outcome

from cospectra import cli
from cospectra.cotree import cotree_to_graph
from cospectra.hdd import CotreeTester
from cospectra.hoist import collect_hoistables
from cospectra.parser import parse_cotree
from cospectra.transform import is_normalized


def has_edge(tree):
    return bool(cotree_to_graph(tree).edges)


def is_disconnected(tree):
    return not cotree_to_graph(tree).is_connected()


def at_least(n):
    return lambda tree: tree.n >= n


@pytest.mark.parametrize('text, predicate, phases, expected', [
    ('U(1,2,J(3,4),J(5,U(6,7)))', has_edge, ('prune', ), 'J(1,2)'),
    ('U(1,2,J(3,4),J(5,U(6,7)))', has_edge, ('prune+hoist', ), 'J(1,2)'),
    ('U(1,J(2,U(3,4)))', is_disconnected, ('hoist', ), 'U(1,2)'),
    ('U(1,J(2,U(3,4)))', is_disconnected, ('prune', 'hoist'), 'U(1,2)'),
    ('J(U(1,2,3),U(4,5))', at_least(2), ('prune', ), None),
])
def test_reduce_cotree(text, predicate, phases, expected):
    reduced = cli.reduce_cotree(parse_cotree(text), predicate, phases=phases)
    assert predicate(reduced)
    assert is_normalized(reduced)
    assert sorted(reduced.leaves()) == list(range(1, reduced.n + 1))
    if expected is not None:
        assert str(reduced) == expected
    else:
        assert reduced.n == 2


def test_reduce_keeps_minimal_tree():
    tree = parse_cotree('J(1,2)')
    assert cli.reduce_cotree(tree, has_edge) == tree


def test_collect_hoistables():
    tree = parse_cotree('U(1,J(2,U(3,4)),J(U(5,6),7))')
    assert [str(node) for node in collect_hoistables(tree)] == ['U(3,4)', 'U(5,6)']
    assert collect_hoistables(parse_cotree('1')) == []


def test_tester():
    tester = CotreeTester(test_builder=lambda config: parse_cotree(config[0]) if config else None, predicate=has_edge)
    assert tester(['J(1,2)'], ('a', )) is Outcome.FAIL
    assert tester(['U(1,2)'], ('b', )) is Outcome.PASS
    assert tester([], ('c', )) is Outcome.PASS


def test_tester_predicate_error():
    def broken(tree):
        raise RuntimeError('boom')

    tester = CotreeTester(test_builder=lambda config: parse_cotree('J(1,2)'), predicate=broken)
    assert tester(['x'], ('d', )) is Outcome.PASS


def test_fuzz_reduces_failures(monkeypatch):
    def failing(tree, *, lam):
        return ['annihilator'] if tree.n >= 3 else []

    monkeypatch.setattr(cli, 'failed_checks', failing)
    summary = cli.fuzz(n_max=8, trials=20, seed=3, reduce=True)
    assert summary.failures
    assert summary.passes + len(summary.failures) == 20
    for failure in summary.failures:
        assert failure.failed == ['annihilator']
        assert parse_cotree(failure.cotree).n >= 3
        assert parse_cotree(failure.reduced).n == 3
