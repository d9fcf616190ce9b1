# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import logging
import random

from collections import defaultdict

from .cotree import CoLeaf, CoNode, Label
from .graph import eliminate_twins, is_induced_p4, TwinKind
from .transform import normalize

logger = logging.getLogger(__name__)


class P4Witness:
    """
    Certificate of non-cographness: an ordered quadruple of vertices inducing
    exactly the path quad[0]-quad[1]-quad[2]-quad[3].
    """

    def __init__(self, quad):
        self.quad = tuple(quad)

    def verify(self, g):
        return is_induced_p4(g, self.quad)

    def __eq__(self, other):
        if not isinstance(other, P4Witness):
            return NotImplemented
        return self.quad == other.quad

    def __hash__(self):
        return hash(self.quad)

    def __str__(self):
        return ','.join(str(v) for v in self.quad)

    def __repr__(self):
        return f'{self.__class__.__name__}({self.quad!r})'


def twin_label(kind):
    return Label.JOIN if kind is TwinKind.TRUE_TWIN else Label.UNION


def graph_to_cotree(g):
    """
    Recognize a cograph by iterated twin elimination and rebuild its cotree by
    replaying the eliminations as leaf splits: re-adding v as a twin of u
    replaces leaf u with a two-leaf node (join for true twins, union for
    false twins).

    :param g: Graph with at least one vertex.
    :return: The normalized cotree, or a P4Witness if g is not a cograph.
    """
    survivors, eliminations, witness = eliminate_twins(g)
    if witness is not None:
        logger.debug('Not a cograph, induced P4: %r', witness)
        return P4Witness(witness)

    splits = defaultdict(list)
    for removed, kept, kind in reversed(eliminations):
        splits[kept].append((twin_label(kind), removed))

    def _subtree(u):
        # Later splits of u happen deeper, around the leaf itself.
        tree = CoLeaf(u)
        for label, v in reversed(splits[u]):
            tree = CoNode(label, (tree, _subtree(v)))
        return tree

    return normalize(_subtree(survivors[0]))


def leaf_twins(t):
    """
    List the twin pairs read off a normalized cotree: leaves sharing a parent
    are false twins under a union node and true twins under a join node.

    :return: List of (u, v, kind) triples with u < v, sorted.
    """
    pairs = []
    for node in t.walk():
        if isinstance(node, CoNode):
            kind = TwinKind.TRUE_TWIN if node.label is Label.JOIN else TwinKind.FALSE_TWIN
            leaves = sorted(child.vertex for child in node.children if isinstance(child, CoLeaf))
            pairs.extend((u, v, kind) for i, u in enumerate(leaves) for v in leaves[i + 1:])
    return sorted(pairs, key=lambda p: (p[0], p[1]))


def random_cotree(n, seed):
    """
    Generate a random normalized cotree on the leaves 1..n by recursively
    partitioning a shuffled label set into at least two blocks, alternating
    union and join by depth from a randomly chosen root label.

    :param n: Number of leaves (at least 1).
    :param seed: Seed of the generator, the output is deterministic in
        (n, seed).
    """
    if n < 1:
        raise ValueError(f'Random cotrees need at least 1 leaf, got {n}.')
    rnd = random.Random(seed)

    def _build(labels, label):
        if len(labels) == 1:
            return CoLeaf(labels[0])
        k = rnd.randint(2, len(labels))
        cuts = sorted(rnd.sample(range(1, len(labels)), k - 1))
        blocks = [labels[i:j] for i, j in zip([0] + cuts, cuts + [len(labels)])]
        return CoNode(label, (_build(block, label.swapped) for block in blocks))

    labels = list(range(1, n + 1))
    rnd.shuffle(labels)
    root_label = rnd.choice((Label.UNION, Label.JOIN))
    return normalize(_build(labels, root_label))
