# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

from .cotree import CoLeaf, CoNode


def canonical_key(node):
    """
    Sort key of the canonical child order: a leaf is keyed by its label, an
    internal node by its label tag followed by the sorted keys of its
    children. Leaves precede internal nodes.
    """
    if isinstance(node, CoLeaf):
        return (0, node.vertex)
    return (1, node.label.value, tuple(sorted(canonical_key(child) for child in node.children)))


def squeeze_tree(node):
    """
    Splice out internal nodes with a single child.

    :param node: The root of the tree to be transformed.
    :return: The root of the transformed tree.
    """
    if isinstance(node, CoLeaf):
        return node

    children = [squeeze_tree(child) for child in node.children]
    if len(children) == 1:
        return children[0]
    return CoNode(node.label, children)


def flatten_labels(node):
    """
    Merge internal children into their parent if they carry the same label
    (unions of unions and joins of joins are associative).

    :param node: The root of the tree to be transformed.
    :return: The root of the transformed tree.
    """
    if isinstance(node, CoLeaf):
        return node

    children = []
    for child in (flatten_labels(child) for child in node.children):
        if isinstance(child, CoNode) and child.label is node.label:
            children.extend(child.children)
        else:
            children.append(child)
    return CoNode(node.label, children)


def sort_children(node):
    if isinstance(node, CoLeaf):
        return node
    return CoNode(node.label, sorted((sort_children(child) for child in node.children), key=canonical_key))


def normalize(t):
    """
    Bring a cotree into normalized form: every internal node has at least two
    children and a label different from its parent's, and children are listed
    in canonical order. The represented graph does not change.
    """
    return sort_children(flatten_labels(squeeze_tree(t)))


def is_normalized(t):
    """
    Check the normalized-form invariants, including the canonical order.
    """
    def _check(node, parent_label):
        if isinstance(node, CoLeaf):
            return True
        if len(node.children) < 2 or node.label is parent_label:
            return False
        keys = [canonical_key(child) for child in node.children]
        if keys != sorted(keys):
            return False
        return all(_check(child, node.label) for child in node.children)

    return _check(t, None)


def complement_cotree(t):
    """
    Swap every internal label, which yields a cotree of the complement graph.
    """
    if isinstance(t, CoLeaf):
        return CoLeaf(t.vertex)
    return CoNode(t.label.swapped, (complement_cotree(child) for child in t.children))


def relabel(t):
    """
    Compact the leaf labels onto 1..m, keeping their relative order.
    """
    mapping = {v: i for i, v in enumerate(sorted(t.leaves()), start=1)}

    def _relabel(node):
        if isinstance(node, CoLeaf):
            return CoLeaf(mapping[node.vertex])
        return CoNode(node.label, (_relabel(child) for child in node.children))

    return _relabel(t)
