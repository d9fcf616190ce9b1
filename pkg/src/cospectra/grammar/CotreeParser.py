# Generated from src/cospectra/resources/Cotree.g4 by ANTLR 4.13.2
# encoding: utf-8
from antlr4 import *
from io import StringIO
import sys
if sys.version_info[1] > 5:
	from typing import TextIO
else:
	from typing.io import TextIO

def serializedATN():
    return [
        4,1,8,23,2,0,7,0,2,1,7,1,1,0,1,0,1,0,1,1,1,1,1,1,1,1,1,1,1,1,5,1,
        14,8,1,10,1,12,1,17,9,1,1,1,1,1,3,1,21,8,1,1,1,0,0,2,0,2,0,1,1,0,
        1,2,22,0,4,1,0,0,0,2,20,1,0,0,0,4,5,3,2,1,0,5,6,5,0,0,1,6,1,1,0,
        0,0,7,21,5,6,0,0,8,9,7,0,0,0,9,10,5,3,0,0,10,15,3,2,1,0,11,12,5,
        5,0,0,12,14,3,2,1,0,13,11,1,0,0,0,14,17,1,0,0,0,15,13,1,0,0,0,15,
        16,1,0,0,0,16,18,1,0,0,0,17,15,1,0,0,0,18,19,5,4,0,0,19,21,1,0,0,
        0,20,7,1,0,0,0,20,8,1,0,0,0,21,3,1,0,0,0,2,15,20
    ]

class CotreeParser ( Parser ):

    grammarFileName = "Cotree.g4"

    atn = ATNDeserializer().deserialize(serializedATN())

    decisionsToDFA = [ DFA(ds, i) for i, ds in enumerate(atn.decisionToState) ]

    sharedContextCache = PredictionContextCache()

    literalNames = [ "<INVALID>", "'U'", "'J'", "'('", "')'", "','" ]

    symbolicNames = [ "<INVALID>", "UNION", "JOIN", "LPAREN", "RPAREN", 
                      "COMMA", "LEAF", "WS", "ERROR" ]

    RULE_cotree = 0
    RULE_expr = 1

    ruleNames =  [ "cotree", "expr" ]

    EOF = Token.EOF
    UNION=1
    JOIN=2
    LPAREN=3
    RPAREN=4
    COMMA=5
    LEAF=6
    WS=7
    ERROR=8

    def __init__(self, input:TokenStream, output:TextIO = sys.stdout):
        super().__init__(input, output)
        self.checkVersion("4.13.2")
        self._interp = ParserATNSimulator(self, self.atn, self.decisionsToDFA, self.sharedContextCache)
        self._predicates = None




    class CotreeContext(ParserRuleContext):
        __slots__ = 'parser'

        def __init__(self, parser, parent:ParserRuleContext=None, invokingState:int=-1):
            super().__init__(parent, invokingState)
            self.parser = parser

        def expr(self):
            return self.getTypedRuleContext(CotreeParser.ExprContext,0)


        def EOF(self):
            return self.getToken(CotreeParser.EOF, 0)

        def getRuleIndex(self):
            return CotreeParser.RULE_cotree

        def accept(self, visitor:ParseTreeVisitor):
            if hasattr( visitor, "visitCotree" ):
                return visitor.visitCotree(self)
            else:
                return visitor.visitChildren(self)




    def cotree(self):

        localctx = CotreeParser.CotreeContext(self, self._ctx, self.state)
        self.enterRule(localctx, 0, self.RULE_cotree)
        try:
            self.enterOuterAlt(localctx, 1)
            self.state = 4
            self.expr()
            self.state = 5
            self.match(CotreeParser.EOF)
        except RecognitionException as re:
            localctx.exception = re
            self._errHandler.reportError(self, re)
            self._errHandler.recover(self, re)
        finally:
            self.exitRule()
        return localctx


    class ExprContext(ParserRuleContext):
        __slots__ = 'parser'

        def __init__(self, parser, parent:ParserRuleContext=None, invokingState:int=-1):
            super().__init__(parent, invokingState)
            self.parser = parser


        def getRuleIndex(self):
            return CotreeParser.RULE_expr

     
        def copyFrom(self, ctx:ParserRuleContext):
            super().copyFrom(ctx)



    class NodeContext(ExprContext):

        def __init__(self, parser, ctx:ParserRuleContext): # actually a CotreeParser.ExprContext
            super().__init__(parser)
            self.op = None # Token
            self.copyFrom(ctx)

        def LPAREN(self):
            return self.getToken(CotreeParser.LPAREN, 0)
        def expr(self, i:int=None):
            if i is None:
                return self.getTypedRuleContexts(CotreeParser.ExprContext)
            else:
                return self.getTypedRuleContext(CotreeParser.ExprContext,i)

        def RPAREN(self):
            return self.getToken(CotreeParser.RPAREN, 0)
        def UNION(self):
            return self.getToken(CotreeParser.UNION, 0)
        def JOIN(self):
            return self.getToken(CotreeParser.JOIN, 0)
        def COMMA(self, i:int=None):
            if i is None:
                return self.getTokens(CotreeParser.COMMA)
            else:
                return self.getToken(CotreeParser.COMMA, i)

        def accept(self, visitor:ParseTreeVisitor):
            if hasattr( visitor, "visitNode" ):
                return visitor.visitNode(self)
            else:
                return visitor.visitChildren(self)


    class LeafContext(ExprContext):

        def __init__(self, parser, ctx:ParserRuleContext): # actually a CotreeParser.ExprContext
            super().__init__(parser)
            self.copyFrom(ctx)

        def LEAF(self):
            return self.getToken(CotreeParser.LEAF, 0)

        def accept(self, visitor:ParseTreeVisitor):
            if hasattr( visitor, "visitLeaf" ):
                return visitor.visitLeaf(self)
            else:
                return visitor.visitChildren(self)



    def expr(self):

        localctx = CotreeParser.ExprContext(self, self._ctx, self.state)
        self.enterRule(localctx, 2, self.RULE_expr)
        self._la = 0 # Token type
        try:
            self.state = 20
            self._errHandler.sync(self)
            token = self._input.LA(1)
            if token in [6]:
                localctx = CotreeParser.LeafContext(self, localctx)
                self.enterOuterAlt(localctx, 1)
                self.state = 7
                self.match(CotreeParser.LEAF)
                pass
            elif token in [1, 2]:
                localctx = CotreeParser.NodeContext(self, localctx)
                self.enterOuterAlt(localctx, 2)
                self.state = 8
                localctx.op = self._input.LT(1)
                _la = self._input.LA(1)
                if not(_la==1 or _la==2):
                    localctx.op = self._errHandler.recoverInline(self)
                else:
                    self._errHandler.reportMatch(self)
                    self.consume()
                self.state = 9
                self.match(CotreeParser.LPAREN)
                self.state = 10
                self.expr()
                self.state = 15
                self._errHandler.sync(self)
                _la = self._input.LA(1)
                while _la==5:
                    self.state = 11
                    self.match(CotreeParser.COMMA)
                    self.state = 12
                    self.expr()
                    self.state = 17
                    self._errHandler.sync(self)
                    _la = self._input.LA(1)

                self.state = 18
                self.match(CotreeParser.RPAREN)
                pass
            else:
                raise NoViableAltException(self)

        except RecognitionException as re:
            localctx.exception = re
            self._errHandler.reportError(self, re)
            self._errHandler.recover(self, re)
        finally:
            self.exitRule()
        return localctx





