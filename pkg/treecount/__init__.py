# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.


"""
treecount: exact spanning tree counting for multigraphs.

The number of spanning trees t(G) of a multigraph (parallel edges are
distinguishable) is computed in several independent ways so that each
result can be checked against the others:

    [treecount.multigraph.MultiGraph]
      immutable multigraph: vertex deletion, vertex identification,
      connectivity, cut vertices and blocks.

    [treecount.oracles]
      matrix_tree_count(): Kirchhoff's theorem with an exact Bareiss
      determinant; brute_force_count(): enumeration of edge subsets.

    [treecount.deletion]
      count_by_deletion(): the vertex deletion recursion, expanding
      t(G) over the neighbor subsets of a non-cut vertex.

    [treecount.families]
      builders and closed-form counts for generalized cones of K_n,
      modified / generalized complete bipartite graphs, generalized
      half cones and complete multipartite graphs.

    [treecount.verify]
      grid verification of every formula against every counter.

Usage example:

>>> from treecount.families import Cone
>>> from treecount.oracles import matrix_tree_count
>>> from treecount.deletion import count_by_deletion
>>>
>>> spec = Cone(3, 3)
>>> spec.count_formula()
108
>>> g = spec.build()
>>> matrix_tree_count(g), count_by_deletion(g)
(108, 108)

From the command line:

    $ python3 -m treecount family cone -m 3 -n 3 --method deletion
"""


__ver__ = '1.0.0'
__author__ = "treecount developers"
