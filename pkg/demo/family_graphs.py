#!/usr/bin/env python3

# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.

"""Write one small member of every family as a Graphviz file
(in the current directory, named after its text form) and print its counts.

Render with e.g.:

$ dot -Tpng cone-m=3-n=3.dot -o cone.png
"""

from treecount.families import Cone
from treecount.families import GeneralizedBipartite
from treecount.families import HalfCone
from treecount.families import ModifiedBipartite
from treecount.families import Multipartite
from treecount.formats import dump_dot
from treecount.oracles import matrix_tree_count


SPECS = [
    Cone(3, 3),
    ModifiedBipartite(2, 3, 4),
    GeneralizedBipartite([3, 2], 3),
    HalfCone(2, [1, 1], 3),
    HalfCone(2, [1, 3], 3),
    Multipartite([2, 2, 2]),
]


def main():
    for spec in SPECS:
        g = spec.build()
        fname = spec.to_text().replace(':', '-').replace(',', '_') + '.dot'
        with open(fname, 'w') as f:
            f.write(dump_dot(g, labels=spec.vertex_labels()))
        print(
            f"{spec.label:<20} formula={spec.count_formula():<6} "
            f"matrix-tree={matrix_tree_count(g):<6} -> {fname}"
        )


if __name__ == '__main__':
    main()
