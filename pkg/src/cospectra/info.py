# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

from .cotree import CoNode


def count(node):
    """
    Count nodes in the tree by kind.

    :param node: The root of the tree to do the counting for.
    :return: A dictionary of counts indexed by kind ('leaf', 'union', 'join').
    """
    stats = {}
    for desc in node.walk():
        ty = desc.label.name.lower() if isinstance(desc, CoNode) else 'leaf'
        stats[ty] = stats.get(ty, 0) + 1
    return stats


def height(node):
    """
    Calculate the height of the tree (a single leaf has height 1).
    """
    return 1 + (max(height(child) for child in node.children) if isinstance(node, CoNode) else 0)


def shape(node):
    """
    Calculate the shape of the tree, i.e., the number of nodes on each tree
    level.

    :return: A list of level sizes.
    """
    def _shape(node, level):
        if len(sizes) <= level:
            sizes.append(0)
        sizes[level] += 1

        if isinstance(node, CoNode):
            for child in node.children:
                _shape(child, level + 1)

    sizes = []
    _shape(node, 0)
    return sizes
