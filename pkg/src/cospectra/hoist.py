# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import itertools
import logging

from picire import AbstractDD, Outcome

from .cotree import CoNode
from .prune import finalize

logger = logging.getLogger(__name__)


class HoistingTestBuilder:

    def __init__(self, tree):
        """
        :param tree: Tree representing the current test case.
        """
        self.tree = tree

    def __call__(self, mapping_config):
        """
        :param mapping_config: A list of (node id, replacement node) pairs.
        :return: The cotree with the mappings applied.
        """
        mapping = dict(mapping_config)
        return finalize(self.tree.rebuild(transform=lambda node: mapping.get(node.id, node)))


def collect_hoistables(node):
    """
    Collect the outermost proper descendants of an internal node that carry
    the same label as the node itself.
    """
    def _collect_hoistables(desc):
        if isinstance(desc, CoNode):
            if desc.label is node.label:
                hoistables.append(desc)
                return
            for child in desc.children:
                _collect_hoistables(child)

    hoistables = []
    if isinstance(node, CoNode):
        for child in node.children:
            _collect_hoistables(child)
    return hoistables


class MappingMin(AbstractDD):

    def __init__(self, test, *, cache=None, id_prefix=None):
        super().__init__(test=test, split=None, cache=cache, id_prefix=id_prefix)

    def __call__(self, config):
        """
        Compute a mapping of the initial configuration to descendants (i.e.,
        smaller subtrees) that keeps the test case interesting.

        :param config: The initial configuration (list of nodes).
        :return: A mapping of node ids to replacement nodes.
        """
        mapping = {}

        for run in itertools.count():
            logger.info('Run #%d', run)
            logger.info('\tMapping size: %d', len(mapping))

            for i, (c, m) in enumerate((c, m) for c in config for m in collect_hoistables(mapping.get(c.id, c))):
                new_mapping = mapping.copy()
                new_mapping[c.id] = m
                mapping_config = list(new_mapping.items())
                config_id = (f'r{run}', f'm{i}')

                outcome = self._lookup_cache(mapping_config, config_id) or self._test_config(mapping_config, config_id)

                if outcome is Outcome.FAIL:
                    mapping = new_mapping
                    logger.info('\tHoisted')
                    break
            else:
                break

        return mapping


def hoist(tree, config_nodes, *,
          reduce_class=None, reduce_config=None, tester_class, tester_config,
          id_prefix, cache):
    """
    Try replacing subtrees with same-labeled descendants.

    :param tree: The root of the tree.
    :param config_nodes: Nodes from one level collected by the HDD algorithm.
    :param reduce_class: Unused, present for being compatible with 'prune'.
    :param reduce_config: Unused, present for being compatible with 'prune'.
    :param tester_class: Reference to a callable class that can decide about the
        interestingness of a test case.
    :param tester_config: Dictionary containing the parameters of the tester
        class init function (except test_builder).
    :param id_prefix: Tuple to prepend to config IDs during tests.
    :param cache: Cache to use.
    :return: The reduced tree and a boolean value that shows whether the tree
        has changed during hoisting.
    """
    if not config_nodes:
        return tree, False

    test_builder = HoistingTestBuilder(tree)
    if cache:
        cache.clear()
        cache.set_test_builder(test_builder)

    test = tester_class(test_builder=test_builder, **tester_config)
    mapping = MappingMin(test, cache=cache, id_prefix=id_prefix)(config_nodes)
    if not mapping:
        return tree, False
    return tree.rebuild(transform=lambda node: mapping.get(node.id, node)), True
