# Generated from src/cospectra/resources/Cotree.g4 by ANTLR 4.13.2
from antlr4 import *
if "." in __name__:
    from .CotreeParser import CotreeParser
else:
    from CotreeParser import CotreeParser

# This class defines a complete generic visitor for a parse tree produced by CotreeParser.

class CotreeVisitor(ParseTreeVisitor):

    # Visit a parse tree produced by CotreeParser#cotree.
    def visitCotree(self, ctx:CotreeParser.CotreeContext):
        return self.visitChildren(ctx)


    # Visit a parse tree produced by CotreeParser#leaf.
    def visitLeaf(self, ctx:CotreeParser.LeafContext):
        return self.visitChildren(ctx)


    # Visit a parse tree produced by CotreeParser#node.
    def visitNode(self, ctx:CotreeParser.NodeContext):
        return self.visitChildren(ctx)



del CotreeParser