# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.

import random

import pytest
from hypothesis import given
from hypothesis import settings

from treecount.deletion import CutVertexPivot
from treecount.deletion import DeletionCounter
from treecount.deletion import IsolatedPivot
from treecount.deletion import MemoCache
from treecount.deletion import NeighborhoodTooLarge
from treecount.deletion import PivotStrategy
from treecount.deletion import TooLargeToCanonicalize
from treecount.deletion import canonical_key
from treecount.deletion import count_by_deletion
from treecount.deletion import expand_at
from treecount.families import Cone
from treecount.families import ModifiedBipartite
from treecount.multigraph import MultiGraph
from treecount.multigraph import NotConnected
from treecount.oracles import ResourceBudgetExceeded
from treecount.oracles import matrix_tree_count

from . import SEED
from . import TreecountTestCase
from . import multigraphs
from . import permuted
from . import random_corpus


def expanded_count(terms):
    return sum(c * matrix_tree_count(h) for c, h in terms)


class TestExpandAt(TreecountTestCase):

    def test_triangle(self):
        g = MultiGraph.complete(3)
        terms = expand_at(g, 0)
        assert [c for c, _ in terms] == [2, 1]
        assert terms[0].graph == MultiGraph.path(2)
        assert terms[1].graph == MultiGraph(1)
        assert expanded_count(terms) == 3

    def test_term_order(self):
        # u = 0 adjacent to 1, 2, 3 with multiplicities 1, 2, 3
        g = MultiGraph(
            4, [(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 2, 1), (2, 3, 1)]
        )
        terms = expand_at(g, 0)
        # first term, then the 3 pairs, then the whole neighborhood
        assert len(terms) == 1 + 3 + 1
        assert [c for c, _ in terms] == [6, 2, 3, 6, 6]
        assert [h.vertex_count for _, h in terms] == [3, 2, 2, 2, 1]

    def test_pendant(self):
        g = MultiGraph(3, [(0, 1, 4), (1, 2, 1)])
        terms = expand_at(g, 0)
        assert terms == [(4, MultiGraph.banana(1))]

    def test_rejections(self):
        with pytest.raises(CutVertexPivot):
            expand_at(MultiGraph.path(3), 1)
        with pytest.raises(IsolatedPivot):
            expand_at(MultiGraph(1), 0)
        with pytest.raises(NotConnected):
            expand_at(MultiGraph(3, [(0, 1, 1)]), 0)

    def test_cone_apex(self):
        terms = expand_at(Cone(3, 3).build(), 3)
        assert [c for c, _ in terms] == [9, 9, 9, 9, 27]
        assert terms[0].graph == MultiGraph.complete(3)
        for _, h in terms[1:4]:
            assert h == MultiGraph.banana(2)
        assert terms[4].graph == MultiGraph(1)
        assert expanded_count(terms) == 108

    def test_corpus(self):
        for g in random_corpus(200, min_n=2, max_mult=4):
            expected = matrix_tree_count(g)
            for u in g.non_cut_vertices():
                assert expanded_count(expand_at(g, u)) == expected, (g, u)

    @given(multigraphs(min_n=2))
    @settings(max_examples=100, deadline=None)
    def test_every_non_cut_vertex(self, g):
        expected = matrix_tree_count(g)
        for u in g.non_cut_vertices():
            assert expanded_count(expand_at(g, u)) == expected


class TestCanonicalKey(TreecountTestCase):

    def test_invariant_under_relabeling(self):
        rng = random.Random(SEED)
        for g in random_corpus(100, max_n=7):
            key = canonical_key(g)
            for _ in range(3):
                assert canonical_key(permuted(g, rng)) == key

    def test_bipartite_labelings(self):
        g = MultiGraph(5, [(p, q, 1) for p in (0, 1) for q in (2, 3, 4)])
        h = MultiGraph(5, [(p, q, 1) for p in (3, 1) for q in (0, 2, 4)])
        assert canonical_key(g) == canonical_key(h)

    def test_distinguishes(self):
        assert canonical_key(MultiGraph.path(4)) != canonical_key(
            MultiGraph(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)])
        )
        # same support, different multiplicities
        a = MultiGraph(3, [(0, 1, 2), (1, 2, 1)])
        b = MultiGraph(3, [(0, 1, 1), (1, 2, 1)])
        assert canonical_key(a) != canonical_key(b)
        assert canonical_key(MultiGraph(2)) != canonical_key(
            MultiGraph.banana(1)
        )
        # doubled apex pairs against one doubled side of a triangle
        k3 = MultiGraph.complete(3).add_edges(0, 1)
        assert canonical_key(Cone(2, 2).build()) != canonical_key(k3)

    def test_twins(self):
        # highly symmetric graphs rely on twin pruning
        assert canonical_key(MultiGraph.complete(10)) == canonical_key(
            MultiGraph.complete(10).relabel([9, 8, 7, 6, 5, 4, 3, 2, 1, 0])
        )

    def test_limit(self):
        with pytest.raises(TooLargeToCanonicalize):
            canonical_key(MultiGraph.path(11))
        assert canonical_key(MultiGraph.complete(11), limit=11)


class TestMemoCache(TreecountTestCase):

    def test_counters(self):
        cache = MemoCache()
        assert cache.get(b'x') is None
        cache.put(b'x', 5)
        assert cache.get(b'x') == 5
        assert (cache.hits, cache.misses, len(cache)) == (1, 1, 1)


class TestDeletionCounter(TreecountTestCase):

    def test_reductions(self):
        counter = DeletionCounter(oracle_floor=0)
        assert counter.count(MultiGraph(1)) == 1
        assert counter.count(MultiGraph(3)) == 0
        assert counter.count(MultiGraph.banana(6)) == 6
        assert counter.count(MultiGraph.path(7)) == 1
        assert counter.count(MultiGraph.cycle(9)) == 9
        # one expansion per odd cycle 9, 7, 5, 3
        assert counter.expansions == 4

    def test_deeper_than_recursion_limit(self):
        # well past the default recursion limit of 1000
        n = 1500
        assert count_by_deletion(MultiGraph.path(n)) == 1
        doubled = MultiGraph(n, [(i, i + 1, 2) for i in range(n - 1)])
        assert count_by_deletion(doubled) == 2 ** (n - 1)
        # a pentagon with a long tail of tripled edges
        tail = [(4, 5, 3)] + [(i, i + 1, 3) for i in range(5, n - 1)]
        g = MultiGraph(n, [(i, (i + 1) % 5, 1) for i in range(5)] + tail)
        assert count_by_deletion(g) == 5 * 3 ** (n - 5)
        # one expansion per odd cycle, about 300 levels deep
        assert count_by_deletion(MultiGraph.cycle(601)) == 601

    def test_pendants_are_peeled_in_one_frame(self):
        counter = DeletionCounter(oracle_floor=0, memoize=False)
        # a triangle with a pendant path hanging off each corner
        edges = [(0, 1, 1), (1, 2, 1), (0, 2, 1)]
        edges += [(0, 3, 2), (3, 4, 2), (1, 5, 3), (2, 6, 5)]
        assert counter.count(MultiGraph(7, edges)) == 3 * 2 * 2 * 3 * 5
        assert counter.expansions == 1

    def test_blocks_multiply(self):
        # two triangles with doubled edges joined at vertex 2
        g = MultiGraph(
            5,
            [(0, 1, 2), (1, 2, 1), (0, 2, 1), (2, 3, 1), (3, 4, 2), (2, 4, 1)],
        )
        assert count_by_deletion(g, pure=True) == 5 * 5

    def test_known_counts(self):
        assert count_by_deletion(MultiGraph.complete(5), pure=True) == 125
        g = ModifiedBipartite(2, 3, 4).build()
        assert count_by_deletion(g, pure=True) == 2048
        assert count_by_deletion(MultiGraph.banana(7)) == 7

    @given(multigraphs(max_n=7))
    @settings(max_examples=100, deadline=None)
    def test_matches_matrix_tree(self, g):
        assert count_by_deletion(g, pure=True) == matrix_tree_count(g)

    def test_complete(self):
        assert count_by_deletion(MultiGraph.complete(8)) == 262144
        assert count_by_deletion(MultiGraph.complete(8), pure=True) == 262144

    def test_strategies_agree(self):
        for g in random_corpus(60, max_n=7):
            expected = matrix_tree_count(g)
            for strategy in PivotStrategy:
                for memo in (True, False):
                    got = count_by_deletion(
                        g, strategy=strategy, memo=memo, pure=True
                    )
                    assert got == expected, (g, strategy, memo)

    def test_strategy_from_string(self):
        counter = DeletionCounter(strategy='max-degree')
        assert counter.strategy is PivotStrategy.MAX_DEGREE
        with pytest.raises(ValueError):
            DeletionCounter(strategy='random')

    def test_choose_pivot(self):
        # star center 0 plus edge 1-2: 0 is the only cut vertex
        g = MultiGraph(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1)])
        assert DeletionCounter().choose_pivot(g) == 3
        g = MultiGraph.complete(4).delete_vertex(3).add_edges(0, 1)
        assert DeletionCounter(strategy='first-non-cut').choose_pivot(g) == 0
        wheel = MultiGraph(
            5,
            [(0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 4, 1)]
            + [(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 1, 1)],
        )
        assert DeletionCounter(strategy='max-degree').choose_pivot(wheel) == 0
        assert DeletionCounter(strategy='min-degree').choose_pivot(wheel) == 1

    def test_memo_shares_isomorphic_subproblems(self):
        cache = MemoCache()
        counter = DeletionCounter(oracle_floor=0, cache=cache)
        assert counter.count(MultiGraph.complete(7)) == 7**5
        assert cache.hits > 0
        no_memo = DeletionCounter(oracle_floor=0, memoize=False)
        assert no_memo.cache is None
        assert no_memo.count(MultiGraph.complete(6)) == 6**4

    def test_large_graphs_skip_cache(self):
        cache = MemoCache()
        counter = DeletionCounter(canonical_limit=3, cache=cache)
        assert counter.count(MultiGraph.cycle(12)) == 12
        assert len(cache) == 0

    def test_neighborhood_limit(self):
        counter = DeletionCounter(neighborhood_limit=3, oracle_floor=0)
        with pytest.raises(NeighborhoodTooLarge):
            counter.count(MultiGraph.complete(6))
        with pytest.raises(ResourceBudgetExceeded):
            counter.count(MultiGraph.complete(6))
