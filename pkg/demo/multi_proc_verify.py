#!/usr/bin/env python3

# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.

"""Verify the default grid with one process per CPU, then a wider
generalized bipartite grid without the brute force oracle.
"""

import os

from treecount.log import config_logging
from treecount.verify import MultiprocessVerifier
from treecount.verify import grid_specs
from treecount.verify import render_table


def main():
    config_logging()
    verifier = MultiprocessVerifier(workers=os.cpu_count())
    print(render_table(verifier.run(grid_specs())))

    wide = grid_specs(['generalized-bipartite'], max_n=6, max_m=4, max_k=4)
    verifier = MultiprocessVerifier(brute_force=False)
    print(render_table(verifier.run(wide)))


if __name__ == '__main__':
    main()
