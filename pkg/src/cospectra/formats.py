# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import networkx as nx

from .graph import Graph


G6_HEADER = '>>graph6<<'
G6_MAX_N = 62


class Graph6Error(ValueError):
    pass


class EdgeListError(ValueError):
    """
    Malformed edge list. `line` is the 1-based line number of the problem.
    """

    def __init__(self, msg, line):
        super().__init__(f'line {line}: {msg}')
        self.line = line


def parse_graph6(text):
    """
    Decode a graph in graph6 format (single-byte size form, n <= 62). An
    optional ``>>graph6<<`` header and surrounding whitespace are ignored.

    :param text: The graph6 string.
    :return: The decoded Graph (vertex i of the format becomes i + 1).
    """
    text = text.strip()
    if text.startswith(G6_HEADER):
        text = text[len(G6_HEADER):]
    if not text:
        raise Graph6Error('Empty graph6 input.')

    data = [ord(c) - 63 for c in text]
    if any(not 0 <= x <= 63 for x in data):
        raise Graph6Error(f'Invalid graph6 character in {text!r}.')
    n = data[0]
    if n > G6_MAX_N:
        raise Graph6Error(f'Bad size byte {text[0]!r}: only n <= {G6_MAX_N} is supported.')

    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise Graph6Error(f'Truncated graph6 input: {nbytes} data bytes expected, got {len(body)}.')
    if len(body) > nbytes:
        raise Graph6Error(f'Trailing bytes in graph6 input: {nbytes} data bytes expected, got {len(body)}.')
    padding = 6 * nbytes - npairs
    if body and body[-1] & ((1 << padding) - 1):
        raise Graph6Error('Nonzero padding bits in graph6 input.')

    try:
        decoded = nx.from_graph6_bytes(text.encode('ascii'))
    except nx.NetworkXError as e:
        raise Graph6Error(str(e)) from e
    return Graph(n, ((u + 1, v + 1) for u, v in decoded.edges()))


def format_graph6(g):
    """
    Encode a graph (n <= 62) in graph6 format, without header.
    """
    if g.n > G6_MAX_N:
        raise Graph6Error(f'Only graphs with n <= {G6_MAX_N} can be encoded, got {g.n}.')
    encoded = nx.Graph()
    encoded.add_nodes_from(g.vertices)
    encoded.add_edges_from(g.edges)
    return nx.to_graph6_bytes(encoded, nodes=list(g.vertices), header=False).decode('ascii').strip()


def parse_edgelist(text):
    """
    Parse an edge list: one ``u v`` pair per line, vertices are positive
    integers and n is the largest label. A line with a single vertex declares
    it without edges. Blank lines and ``#`` comments are ignored; duplicate
    edges are collapsed.
    """
    edges = []
    n = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split('#', 1)[0].split()
        if not tokens:
            continue
        if len(tokens) > 2:
            raise EdgeListError(f'expected "u v", got {line.strip()!r}', lineno)
        try:
            vertices = [int(token) for token in tokens]
        except ValueError as e:
            raise EdgeListError(f'non-integer token in {line.strip()!r}', lineno) from e
        if any(v < 1 for v in vertices):
            raise EdgeListError(f'vertex labels must be positive, got {line.strip()!r}', lineno)
        if len(vertices) == 2:
            if vertices[0] == vertices[1]:
                raise EdgeListError(f'self-loop at vertex {vertices[0]}', lineno)
            edges.append(tuple(vertices))
        n = max(n, *vertices)
    return Graph(n, edges)


def format_edgelist(g):
    """
    Write a graph as an edge list that :func:`parse_edgelist` reads back
    identically (isolated vertices get single-vertex lines).
    """
    lines = [f'{u} {v}' for u, v in g.edges]
    lines += [str(v) for v in g.vertices if not g.degree(v)]
    return ''.join(f'{line}\n' for line in lines)
