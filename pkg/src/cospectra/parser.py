# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import logging

from antlr4 import CommonTokenStream, InputStream
from antlr4.error.ErrorListener import ErrorListener

from .cotree import CoLeaf, CoNode, Label
from .grammar import CotreeLexer, CotreeParser, CotreeVisitor

logger = logging.getLogger(__name__)


class CotreeSyntaxError(ValueError):
    """
    Malformed cotree text. `offset` is the byte offset of the offending
    position in the UTF-8 encoded input.
    """

    def __init__(self, msg, offset):
        super().__init__(f'{msg} at offset {offset}')
        self.offset = offset


class DuplicateLabelError(ValueError):
    pass


class LabelGapError(ValueError):
    pass


class RaisingErrorListener(ErrorListener):
    """
    Error listener that turns the first syntax error reported by the lexer or
    the parser into a CotreeSyntaxError.
    """

    def __init__(self, text):
        self.text = text

    def syntaxError(self, recognizer, offendingSymbol, line, column, msg, e):
        start = offendingSymbol.start if offendingSymbol is not None else column
        raise CotreeSyntaxError(msg, len(self.text[:start].encode('utf-8')))


class CotreeBuilder(CotreeVisitor):
    """
    Visitor building CoNode and CoLeaf objects from the parse tree.
    """

    def visitCotree(self, ctx):
        return self.visit(ctx.expr())

    def visitLeaf(self, ctx):
        return CoLeaf(int(ctx.LEAF().getText()))

    def visitNode(self, ctx):
        return CoNode(Label(ctx.op.text), [self.visit(child) for child in ctx.expr()])


def check_labels(t):
    """
    Ensure that the leaf labels of a cotree are exactly 1..n, each once.

    :raises DuplicateLabelError: If a label occurs more than once.
    :raises LabelGapError: If the labels are not contiguous from 1.
    """
    seen = set()
    for v in t.leaves():
        if v in seen:
            raise DuplicateLabelError(f'Duplicate leaf label: {v}')
        seen.add(v)
    missing = sorted(set(range(1, len(seen) + 1)) - seen)
    if missing:
        raise LabelGapError(f'Leaf labels are not contiguous, missing: {", ".join(map(str, missing))}')


def parse_cotree(text):
    """
    Parse the cotree DSL, e.g., ``J(1,U(2,3))``. Internal nodes may have any
    positive number of children.

    :param text: The DSL text.
    :return: The parsed cotree.
    """
    listener = RaisingErrorListener(text)

    lexer = CotreeLexer(InputStream(text))
    lexer.removeErrorListeners()
    lexer.addErrorListener(listener)

    parser = CotreeParser(CommonTokenStream(lexer))
    parser.removeErrorListeners()
    parser.addErrorListener(listener)

    tree = CotreeBuilder().visit(parser.cotree())
    check_labels(tree)
    logger.debug('Parsed cotree with %d leaves', tree.n)
    return tree
