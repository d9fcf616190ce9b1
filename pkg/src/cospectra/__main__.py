# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

from cospectra.cli import execute


if __name__ == '__main__':
    execute()
