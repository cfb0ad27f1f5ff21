# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.

import json
import textwrap

import pytest

from treecount.families import FAMILIES
from treecount.families import HalfCone
from treecount.formats import EdgeListParseError
from treecount.formats import dump_dot
from treecount.formats import dump_edge_list
from treecount.formats import dump_json
from treecount.formats import load_edge_list
from treecount.formats import parse_edge_list
from treecount.multigraph import GraphError
from treecount.multigraph import MultiGraph
from treecount.oracles import matrix_tree_count
from treecount.verify import grid_specs

from . import TreecountTestCase
from . import random_corpus
from . import write_file


class TestParseEdgeList(TreecountTestCase):

    def test_basic(self):
        text = textwrap.dedent("""
            # a triangle with a doubled side
            0 1 2
            1 2 1   # trailing comment
            0 2 1
            """)
        g = parse_edge_list(text)
        assert g == MultiGraph(3, [(0, 1, 2), (1, 2, 1), (0, 2, 1)])

    def test_header(self):
        g = parse_edge_list("vertices 4\n0 1 1\n")
        assert g.vertex_count == 4
        assert not g.is_connected()

    def test_repeated_pairs_accumulate(self):
        g = parse_edge_list("0 1 1\n1 0 2\n")
        assert g.edges() == [(0, 1, 3)]

    def test_self_loop_warns(self):
        with self.assertLogs('treecount', level='WARNING') as cm:
            g = parse_edge_list("0 1 1\n2 2 3\n")
        assert "line 2" in cm.output[0]
        assert "self-loop" in cm.output[0]
        # vertex 2 still exists, isolated
        assert g.vertex_count == 3
        assert g.edges() == [(0, 1, 1)]

    def test_errors(self):
        cases = [
            ("", None),
            ("# nothing\n", None),
            ("0 1\n", 1),
            ("0 1 x\n", 1),
            ("0 1 1\n0 -1 1\n", 2),
            ("0 1 0\n", 1),
            ("\n\nvertices\n", 3),
            ("vertices 0\n", 1),
            ("0 1 1\nvertices 3\n", 2),
            ("vertices 2\n0 2 1\n", 2),
            ("0 +1 1\n", 1),
            ("0 1 1_000\n", 1),
            ("vertices \u0661\n", 1),
            ("0 1 \uff13\n", 1),
        ]
        for text, lineno in cases:
            with pytest.raises(EdgeListParseError) as cm:
                parse_edge_list(text)
            assert cm.value.lineno == lineno, text
            if lineno is not None:
                assert str(cm.value).startswith(f"line {lineno}: ")

    def test_error_hierarchy(self):
        with pytest.raises(GraphError):
            parse_edge_list("a b c\n")
        with pytest.raises(ValueError):
            parse_edge_list("a b c\n")

    def test_load(self):
        fname = write_file(self.get_testfn(suffix='.txt'), "0 1 5\n")
        assert load_edge_list(fname) == MultiGraph.banana(5)

    def test_load_invalid_utf8(self):
        fname = self.get_testfn(suffix='.txt')
        with open(fname, 'wb') as f:
            f.write(b"0 1 1\n\xff\xfe 2 1\n")
        with pytest.raises(EdgeListParseError) as cm:
            load_edge_list(fname)
        assert cm.value.lineno == 2
        assert "UTF-8" in str(cm.value)


class TestDump(TreecountTestCase):

    def test_edge_list_round_trip(self):
        for g in random_corpus(30):
            assert parse_edge_list(dump_edge_list(g)) == g
        # isolated trailing vertices survive thanks to the header
        g = MultiGraph(5, [(0, 1, 1)])
        assert parse_edge_list(dump_edge_list(g)) == g

    def test_every_grid_family_round_trips(self):
        fname = self.get_testfn()
        for spec in grid_specs():
            g = spec.build()
            text = dump_edge_list(g)
            h = parse_edge_list(text)
            assert h == g, spec
            assert matrix_tree_count(h) == spec.count_formula(), spec
        # and once per family through a file
        for name in FAMILIES:
            spec = grid_specs([name])[-1]
            write_file(fname, dump_edge_list(spec.build()))
            assert load_edge_list(fname) == spec.build(), spec

    def test_edge_list_text(self):
        g = MultiGraph(3, [(0, 1, 2), (1, 2, 1)])
        assert dump_edge_list(g) == "vertices 3\n0 1 2\n1 2 1\n"

    def test_dot(self):
        g = MultiGraph(2, [(0, 1, 3)])
        text = dump_dot(g)
        assert text.startswith("graph G {\n")
        assert text.count("0 -- 1;") == 3
        assert text.endswith("}\n")
        labelled = dump_dot(g, name='B', labels=['p1', 'q1'])
        assert 'graph B {' in labelled
        assert '0 [label="p1"];' in labelled
        assert '1 [label="q1"];' in labelled

    def test_json(self):
        spec = HalfCone(2, [1, 1], 3)
        doc = json.loads(dump_json(spec.build()))
        assert doc['vertices'] == 6
        # 3 * 2 bipartite pairs plus 2 apex pairs
        assert len(doc['edges']) == 8
        assert sum(e['mult'] for e in doc['edges']) == 10
        assert {'u': 3, 'v': 5, 'mult': 2} in doc['edges']
