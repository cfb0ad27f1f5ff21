#!/usr/bin/env python3

# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.

"""Expand the count of a small multigraph once at a non-cut vertex and
print every term, then let DeletionCounter finish the job with DEBUG
logging enabled so that each reduction shows up on stderr.
"""

import logging

from treecount.deletion import DeletionCounter
from treecount.deletion import expand_at
from treecount.log import config_logging
from treecount.multigraph import MultiGraph
from treecount.oracles import matrix_tree_count


def main():
    # a 4-cycle with a doubled side and a tripled chord
    g = MultiGraph(4, [(0, 1, 2), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    g = g.add_edges(0, 2, 3)
    print(f"G = {g!r}")
    print(f"t(G) = {matrix_tree_count(g)}")

    u = g.non_cut_vertices()[0]
    total = 0
    for coef, h in expand_at(g, u):
        t = matrix_tree_count(h)
        total += coef * t
        print(f"  {coef:>3} * t({h!r}) = {coef} * {t}")
    print(f"sum of the terms at vertex {u} = {total}")

    config_logging(level=logging.DEBUG)
    counter = DeletionCounter(oracle_floor=0)
    print(f"pure deletion count = {counter.count(g)}")
    hits = counter.cache.hits
    print(f"expansions: {counter.expansions}, cache hits: {hits}")


if __name__ == '__main__':
    main()
