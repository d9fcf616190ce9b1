# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

from .CotreeLexer import CotreeLexer
from .CotreeParser import CotreeParser
from .CotreeVisitor import CotreeVisitor
