# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

from enum import Enum
from itertools import count
from textwrap import indent

from .graph import Graph


class Label(Enum):
    """
    Label of an internal cotree node.
    """
    UNION = 'U'
    JOIN = 'J'

    @property
    def swapped(self):
        return Label.JOIN if self is Label.UNION else Label.UNION


class CoTree:
    """
    Base class of cotree nodes.

    Nodes are immutable. Every node carries a unique `id` that does not take
    part in equality: two trees are equal iff they are structurally equal.
    """

    # ID generator
    __id = count()

    def __init__(self):
        self.id = next(self.__id)

    def leaves(self):
        """
        :return: The vertex ids of the leaves in left-to-right order.
        """
        raise NotImplementedError()

    @property
    def n(self):
        return len(self.leaves())

    def unparse(self, *, transform=None):
        """
        Build the DSL text of the tree.

        :param transform: A function applied to each node before unparsing
            (returning the node to unparse instead, or None to drop the node),
            or None.
        :return: The DSL text, or the empty string if everything is dropped.
        """
        tree = self.rebuild(transform=transform) if transform else self
        return tree._unparse() if tree is not None else ''

    def _unparse(self):
        raise NotImplementedError()

    def rebuild(self, *, transform=None):
        """
        Build a new tree by applying `transform` top-down. A node mapped to
        None is dropped together with its subtree; an internal node that loses
        all of its children is dropped, too. Untouched subtrees are shared with
        the original tree.

        :param transform: A function from node to node or None, or None.
        :return: The root of the rebuilt tree, or None.
        """
        def _rebuild(node):
            if transform:
                node = transform(node)
            if node is None or isinstance(node, CoLeaf):
                return node

            children = [c for c in (_rebuild(child) for child in node.children) if c is not None]
            if not children:
                return None
            if len(children) == len(node.children) and all(a is b for a, b in zip(children, node.children)):
                return node
            return CoNode(node.label, children)

        return _rebuild(self)

    def walk(self):
        """
        Iterate over the nodes of the tree in pre-order.
        """
        yield self

    def __str__(self):
        return self.unparse()


class CoLeaf(CoTree):

    def __init__(self, vertex):
        super().__init__()
        self.vertex = vertex

    def leaves(self):
        return [self.vertex]

    def _unparse(self):
        return str(self.vertex)

    def __eq__(self, other):
        if not isinstance(other, CoTree):
            return NotImplemented
        return isinstance(other, CoLeaf) and self.vertex == other.vertex

    def __hash__(self):
        return hash(self.vertex)

    def __repr__(self):
        return f'{self.__class__.__name__}(vertex={self.vertex!r}, id={self.id!r})'


class CoNode(CoTree):

    def __init__(self, label, children):
        super().__init__()
        self.label = Label(label)
        self.children = tuple(children)
        if not self.children:
            raise ValueError('Internal cotree nodes need at least one child.')

    def leaves(self):
        return [v for child in self.children for v in child.leaves()]

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def _unparse(self):
        return f'{self.label.value}({",".join(child._unparse() for child in self.children)})'

    def __eq__(self, other):
        if not isinstance(other, CoTree):
            return NotImplemented
        return isinstance(other, CoNode) and self.label is other.label and self.children == other.children

    def __hash__(self):
        return hash((self.label, self.children))

    def __repr__(self):
        parts = [
            f'label={self.label.name}',
            f'id={self.id!r}',
            'children=[\n%s\n]' % indent(',\n'.join(repr(child) for child in self.children), '  '),
        ]
        return f'{self.__class__.__name__}({", ".join(parts)})'


def cotree_to_graph(t):
    """
    Evaluate a cotree bottom-up: leaves become singletons, union nodes take
    the disjoint union of their children, join nodes additionally connect
    every pair of vertices lying under different children. Leaf labels are
    kept as vertex ids.

    :param t: Cotree whose leaves are labeled 1..n.
    :return: The cograph of the tree.
    """
    edges = []

    def _evaluate(node):
        if isinstance(node, CoLeaf):
            return [node.vertex]
        blocks = [_evaluate(child) for child in node.children]
        if node.label is Label.JOIN:
            for i, left in enumerate(blocks):
                for right in blocks[i + 1:]:
                    edges.extend((u, v) for u in left for v in right)
        return [v for block in blocks for v in block]

    vertices = _evaluate(t)
    return Graph(len(vertices), edges)
