# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import itertools
import logging

from picire import Outcome

from .cotree import CoNode
from .info import height
from .prune import prune

logger = logging.getLogger(__name__)


class CotreeTester:
    """
    Tester that decides about the interestingness of a cotree by calling a
    predicate in-process.
    """

    def __init__(self, *, test_builder, predicate):
        """
        :param test_builder: Callable that turns a configuration into a cotree
            (or None).
        :param predicate: Callable that returns True if the cotree still
            exhibits the failure being reduced.
        """
        self.test_builder = test_builder
        self.predicate = predicate

    def __call__(self, config, config_id):
        tree = self.test_builder(config)
        if tree is None:
            return Outcome.PASS
        try:
            interesting = self.predicate(tree)
        except Exception as e:  # pylint: disable=broad-except
            logger.debug('Predicate raised on config %s: %r', '_'.join(config_id), e)
            interesting = False
        return Outcome.FAIL if interesting else Outcome.PASS


def hddmin(tree, *,
           reduce_class, reduce_config, tester_class, tester_config,
           id_prefix=(), cache=None, transformations=(prune,), hdd_star=True):
    """
    Run the hierarchical delta debugging reduce algorithm on a cotree.

    :param tree: The root of the cotree to reduce.
    :param reduce_class: Reference to the reducer class (e.g., picire.DD).
    :param reduce_config: Dictionary containing the parameters of the
        reduce_class init function.
    :param tester_class: Reference to a callable class that can decide about the
        interestingness of a test case.
    :param tester_config: Dictionary containing the parameters of the tester
        class init function (except test_builder).
    :param id_prefix: Tuple to prepend to config IDs during tests.
    :param cache: Cache to use.
    :param transformations: Iterable of transformations that reduce a
        configuration of nodes.
    :param hdd_star: Boolean to enable repeating the levelwise passes until
        a fixpoint is reached.
    :return: The reduced (not yet finalized) tree.
    """

    def collect_level_nodes(level):
        def _collect_level_nodes(node, current_level):
            if current_level == level:
                level_nodes.append(node)
            elif isinstance(node, CoNode):
                for child in node.children:
                    _collect_level_nodes(child, current_level + 1)
        level_nodes = []
        _collect_level_nodes(tree, 0)
        return level_nodes

    for iter_cnt in itertools.count():
        logger.info('Iteration #%d', iter_cnt)

        changed = False
        for level in itertools.count():
            if not collect_level_nodes(level):
                break

            logger.info('Checking level %d / %d ...', level, height(tree))

            for trans_cnt, transformation in enumerate(transformations):
                # Earlier transformations may have removed nodes of this level.
                level_nodes = collect_level_nodes(level)
                if not level_nodes:
                    break

                tree, transformed = transformation(tree, level_nodes,
                                                   reduce_class=reduce_class, reduce_config=reduce_config,
                                                   tester_class=tester_class, tester_config=tester_config,
                                                   id_prefix=id_prefix + (f'i{iter_cnt}', f'l{level}', f't{trans_cnt}'),
                                                   cache=cache)

                changed = changed or transformed

        if not hdd_star or not changed:
            break

    return tree
