# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

from . import cli
from . import info
from . import transform
from .cli import __version__, fuzz, recognize_graph, reduce_cotree, synthesize_graph
from .cotree import CoLeaf, CoNode, CoTree, cotree_to_graph, Label
from .exact import ExactMatrix, ExactScalar
from .formats import format_edgelist, format_graph6, parse_edgelist, parse_graph6
from .graph import find_induced_p4, find_twin_pair, Graph, TwinKind
from .hdd import hddmin
from .parser import parse_cotree
from .recognize import graph_to_cotree, P4Witness, random_cotree
from .synthesis import eigenbasis, NotACographError, synthesize, twin_sequence, TwinSequence
from .verify import certify, numeric_eigenvalues
