# Generated from src/cospectra/resources/Cotree.g4 by ANTLR 4.13.2
from antlr4 import *
from io import StringIO
import sys
if sys.version_info[1] > 5:
    from typing import TextIO
else:
    from typing.io import TextIO


def serializedATN():
    return [
        4,0,8,43,6,-1,2,0,7,0,2,1,7,1,2,2,7,2,2,3,7,3,2,4,7,4,2,5,7,5,2,
        6,7,6,2,7,7,7,1,0,1,0,1,1,1,1,1,2,1,2,1,3,1,3,1,4,1,4,1,5,1,5,5,
        5,30,8,5,10,5,12,5,33,9,5,1,6,4,6,36,8,6,11,6,12,6,37,1,6,1,6,1,
        7,1,7,0,0,8,1,1,3,2,5,3,7,4,9,5,11,6,13,7,15,8,1,0,3,1,0,49,57,1,
        0,48,57,2,0,9,13,32,32,44,0,1,1,0,0,0,0,3,1,0,0,0,0,5,1,0,0,0,0,
        7,1,0,0,0,0,9,1,0,0,0,0,11,1,0,0,0,0,13,1,0,0,0,0,15,1,0,0,0,1,17,
        1,0,0,0,3,19,1,0,0,0,5,21,1,0,0,0,7,23,1,0,0,0,9,25,1,0,0,0,11,27,
        1,0,0,0,13,35,1,0,0,0,15,41,1,0,0,0,17,18,5,85,0,0,18,2,1,0,0,0,
        19,20,5,74,0,0,20,4,1,0,0,0,21,22,5,40,0,0,22,6,1,0,0,0,23,24,5,
        41,0,0,24,8,1,0,0,0,25,26,5,44,0,0,26,10,1,0,0,0,27,31,7,0,0,0,28,
        30,7,1,0,0,29,28,1,0,0,0,30,33,1,0,0,0,31,29,1,0,0,0,31,32,1,0,0,
        0,32,12,1,0,0,0,33,31,1,0,0,0,34,36,7,2,0,0,35,34,1,0,0,0,36,37,
        1,0,0,0,37,35,1,0,0,0,37,38,1,0,0,0,38,39,1,0,0,0,39,40,6,6,0,0,
        40,14,1,0,0,0,41,42,9,0,0,0,42,16,1,0,0,0,3,0,31,37,1,6,0,0
    ]

class CotreeLexer(Lexer):

    atn = ATNDeserializer().deserialize(serializedATN())

    decisionsToDFA = [ DFA(ds, i) for i, ds in enumerate(atn.decisionToState) ]

    UNION = 1
    JOIN = 2
    LPAREN = 3
    RPAREN = 4
    COMMA = 5
    LEAF = 6
    WS = 7
    ERROR = 8

    channelNames = [ u"DEFAULT_TOKEN_CHANNEL", u"HIDDEN" ]

    modeNames = [ "DEFAULT_MODE" ]

    literalNames = [ "<INVALID>",
            "'U'", "'J'", "'('", "')'", "','" ]

    symbolicNames = [ "<INVALID>",
            "UNION", "JOIN", "LPAREN", "RPAREN", "COMMA", "LEAF", "WS", 
            "ERROR" ]

    ruleNames = [ "UNION", "JOIN", "LPAREN", "RPAREN", "COMMA", "LEAF", 
                  "WS", "ERROR" ]

    grammarFileName = "Cotree.g4"

    def __init__(self, input=None, output:TextIO = sys.stdout):
        super().__init__(input, output)
        self.checkVersion("4.13.2")
        self._interp = LexerATNSimulator(self, self.atn, self.decisionsToDFA, PredictionContextCache())
        self._actions = None
        self._predicates = None


