# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import logging
import random

from enum import Enum
from itertools import combinations

logger = logging.getLogger(__name__)


class TwinKind(Enum):
    """
    Kind of a twin pair: false twins (duplicates) are non-adjacent, true twins
    (coduplicates) are adjacent.
    """
    FALSE_TWIN = 'false'
    TRUE_TWIN = 'true'


class Graph:
    """
    Labeled simple undirected graph on the vertices 1..n.

    Instances are immutable: the adjacency is stored as a tuple of frozen
    neighbor sets (index 0 is unused so that vertex ids index directly).
    """

    __slots__ = ('n', '_adj')

    def __init__(self, n, edges=()):
        """
        Initialize a graph.

        :param n: Number of vertices (labeled 1..n).
        :param edges: Iterable of vertex pairs. Duplicates are collapsed.
        """
        if n < 0:
            raise ValueError(f'Vertex count must be non-negative, got {n}.')
        adj = [set() for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f'Edge {{{u}, {v}}} is out of the vertex range 1..{n}.')
            if u == v:
                raise ValueError(f'Self-loop at vertex {u}.')
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)

    @property
    def vertices(self):
        return range(1, self.n + 1)

    @property
    def edges(self):
        """
        Sorted tuple of edges, each as a pair (u, v) with u < v.
        """
        return tuple((u, v) for u in self.vertices for v in sorted(self._adj[u]) if u < v)

    def neighbors(self, v):
        return self._adj[v]

    def adjacent(self, u, v):
        return v in self._adj[u]

    def degree(self, v):
        return len(self._adj[v])

    def adjacency(self):
        """
        :return: A fresh, mutable vertex -> neighbor set mapping.
        """
        return {v: set(self._adj[v]) for v in self.vertices}

    def is_connected(self):
        if self.n <= 1:
            return True
        seen = {1}
        stack = [1]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f'{self.__class__.__name__}({self.n!r}, {list(self.edges)!r})'


def _combine(g1, g2, *, cross):
    offset = g1.n
    edges = list(g1.edges)
    edges += [(u + offset, v + offset) for u, v in g2.edges]
    if cross:
        edges += [(u, v + offset) for u in g1.vertices for v in g2.vertices]
    return Graph(g1.n + g2.n, edges)


def union_of(g1, g2):
    """
    Disjoint union. `g1` keeps the labels 1..n1, `g2` is shifted onto
    n1+1..n1+n2.
    """
    return _combine(g1, g2, cross=False)


def join_of(g1, g2):
    """
    Join: the disjoint union plus every pair between the two operands. Labels
    follow the convention of :func:`union_of`.
    """
    return _combine(g1, g2, cross=True)


def complement_of(g):
    return Graph(g.n, ((u, v) for u, v in combinations(g.vertices, 2) if not g.adjacent(u, v)))


def _twin_kind(adj, u, v):
    """
    Classify the pair (u, v) of the adjacency mapping `adj`.

    :return: The TwinKind of the pair, or None if they are not twins.
    """
    nu, nv = adj[u], adj[v]
    adjacent = v in nu
    if len(nu) != len(nv):
        return None
    if adjacent:
        if nu - {v} != nv - {u}:
            return None
        return TwinKind.TRUE_TWIN
    if nu != nv:
        return None
    return TwinKind.FALSE_TWIN


def first_twin_pair(adj):
    """
    Find the lexicographically smallest twin pair of a vertex -> neighbor set
    mapping (which need not have contiguous vertex ids).

    :return: Triple (u, v, kind) with u < v, or None.
    """
    vertices = sorted(adj)
    for i, u in enumerate(vertices):
        for v in vertices[i + 1:]:
            kind = _twin_kind(adj, u, v)
            if kind is not None:
                return u, v, kind
    return None


def find_twin_pair(g):
    """
    Find the lexicographically smallest pair (u, v), u < v, with
    N(u) \\ {v} = N(v) \\ {u}.

    :param g: Graph with at least two vertices.
    :return: Triple (u, v, kind), or None if the graph is twin-free.
    """
    if g.n < 2:
        raise ValueError(f'Twin search needs at least 2 vertices, got {g.n}.')
    return first_twin_pair(g.adjacency())


def first_induced_p4(adj):
    """
    Find the lexicographically smallest ordered quadruple (a, b, c, d) of a
    vertex -> neighbor set mapping that induces exactly the edges ab, bc, cd.
    """
    for a in sorted(adj):
        na = adj[a]
        for b in sorted(na):
            for c in sorted(adj[b]):
                if c == a or c in na:
                    continue
                for d in sorted(adj[c]):
                    if d in (a, b) or d in na or d in adj[b]:
                        continue
                    return a, b, c, d
    return None


def find_induced_p4(g):
    """
    Search for an induced 4-vertex path.

    :return: Ordered quadruple (a, b, c, d) inducing exactly ab, bc, cd, or
        None if the graph is a cograph.
    """
    return first_induced_p4(g.adjacency())


def is_induced_p4(g, quad):
    """
    Check that `quad` induces exactly the path quad[0]-quad[1]-quad[2]-quad[3].
    """
    if len(set(quad)) != 4 or any(not 1 <= v <= g.n for v in quad):
        return False
    path = {frozenset(quad[i:i + 2]) for i in range(3)}
    return all(g.adjacent(u, v) == (frozenset((u, v)) in path) for u, v in combinations(quad, 2))


def eliminate_twins(g):
    """
    Repeatedly remove the larger vertex of the first twin pair until a single
    vertex remains or the remaining induced subgraph is twin-free.

    :param g: Graph with at least one vertex.
    :return: Triple (survivors, eliminations, witness): the vertices left,
        the (removed, kept, kind) triples in removal order, and an induced P4
        of the remaining subgraph (None iff a single vertex survived).
    """
    if g.n < 1:
        raise ValueError('Twin elimination needs at least 1 vertex.')
    adj = g.adjacency()
    eliminations = []
    while len(adj) > 1:
        pair = first_twin_pair(adj)
        if pair is None:
            break
        kept, removed, kind = pair
        for w in adj.pop(removed):
            adj[w].discard(removed)
        eliminations.append((removed, kept, kind))
        logger.debug('Eliminated %d as %s twin of %d', removed, kind.value, kept)

    witness = None
    if len(adj) > 1:
        witness = first_induced_p4(adj)
        assert witness is not None, f'Twin-free graph without induced P4 on {sorted(adj)}'
    return sorted(adj), eliminations, witness


def random_graph(n, p, seed):
    """
    Seeded Erdos-Renyi G(n, p) sample.
    """
    rnd = random.Random(seed)
    return Graph(n, ((u, v) for u, v in combinations(range(1, n + 1), 2) if rnd.random() < p))


def threshold_graph(sequence):
    """
    Build a threshold graph from a creation sequence over {'i', 'd'}: vertex
    k is added isolated ('i') or dominating ('d'). The first symbol stands for
    the initial vertex, its letter is irrelevant.
    """
    if not sequence or set(sequence) - {'i', 'd'}:
        raise ValueError(f'Invalid creation sequence: {sequence!r}')
    edges = [(u, v) for v in range(2, len(sequence) + 1) if sequence[v - 1] == 'd' for u in range(1, v)]
    return Graph(len(sequence), edges)


def random_threshold_graph(n, seed):
    rnd = random.Random(seed)
    return threshold_graph('i' + ''.join(rnd.choice('id') for _ in range(n - 1)))
