# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.

"""
Spanning tree counting by vertex deletion.

Let u be a vertex which is not a cut vertex, with neighbors p_1 .. p_n
reached through a_1 .. a_n parallel edges, and let H = G - u.  Then

    t(G) = (a_1 + ... + a_n) t(H) + sum over S subset of N(u), |S| >= 2,
           of (prod of a_i for p_i in S) * t(H_S)

where H_S is H with the vertices of S identified.  expand_at() produces
those terms; DeletionCounter applies the expansion recursively with the
usual reductions in front of it:

 - disconnected graph            -> 0
 - one vertex                    -> 1
 - two vertices                  -> their multiplicity
 - at most `oracle_floor` vertices -> matrix_tree_count()
 - pendant vertex of mult a      -> a * t(G - pendant)
 - cut vertex present            -> product over the blocks
 - otherwise                     -> expand at a pivot chosen by
                                    `strategy` and recurse

Isomorphic subproblems are shared through a cache keyed by an exact
canonical form (canonical_key()).
"""

import enum
import itertools
import math
import threading

from .log import debug
from .multigraph import ExpansionTerm
from .multigraph import NotConnected
from .oracles import ResourceBudgetExceeded
from .oracles import matrix_tree_count


__all__ = [
    'CutVertexPivot',
    'DeletionCounter',
    'DeletionError',
    'IsolatedPivot',
    'MemoCache',
    'NeighborhoodTooLarge',
    'PivotStrategy',
    'TooLargeToCanonicalize',
    'canonical_key',
    'count_by_deletion',
    'expand_at',
]

CANONICAL_LIMIT = 10


# ===================================================================
# --- exceptions
# ===================================================================


class DeletionError(Exception):
    """Base class for deletion engine exceptions."""


class CutVertexPivot(DeletionError, ValueError):
    """Raised when expanding at a cut vertex."""


class IsolatedPivot(DeletionError, ValueError):
    """Raised when expanding at a vertex without neighbors."""


class NeighborhoodTooLarge(DeletionError, ResourceBudgetExceeded):
    """Raised when a pivot has more neighbors than allowed; the
    expansion has 2 ** |N(u)| terms.
    """


class TooLargeToCanonicalize(DeletionError):
    """Raised by canonical_key() above the canonicalization limit."""


class PivotStrategy(enum.Enum):
    MIN_DEGREE = 'min-degree'
    MAX_DEGREE = 'max-degree'
    FIRST_NON_CUT = 'first-non-cut'


# ===================================================================
# --- single expansion step
# ===================================================================


def expand_at(g, u):
    """Apply the vertex deletion formula once at vertex u.

    Returns a list of ExpansionTerm(coefficient, graph) such that
    t(g) == sum(coefficient * t(graph)).  The first term is
    (a_1 + ... + a_n, g - u), followed by one term per neighbor subset
    of size >= 2 in order of increasing size.

    Errors:

     - NotConnected: g is disconnected
     - IsolatedPivot: u has no neighbors
     - CutVertexPivot: u is a cut vertex

    A pendant vertex (one neighbor) is accepted, not rejected: it
    yields the single term (a, g - u).
    """
    if not g.is_connected():
        raise NotConnected(f'{g!r} is not connected')
    nbrs = g.neighbors(u)
    if not nbrs:
        raise IsolatedPivot(f'vertex {u!r} has no neighbors')
    if u in g.cut_vertices():
        raise CutVertexPivot(f'vertex {u!r} is a cut vertex')
    h = g.delete_vertex(u)
    # neighbor ids as seen in h
    shifted = [(v - (v > u), a) for v, a in nbrs]
    terms = [ExpansionTerm(sum(a for _, a in nbrs), h)]
    for size in range(2, len(shifted) + 1):
        for subset in itertools.combinations(shifted, size):
            coef = math.prod(a for _, a in subset)
            merged = h.identify_vertices(v for v, _ in subset)
            terms.append(ExpansionTerm(coef, merged))
    return terms


# ===================================================================
# --- canonical form
# ===================================================================


def _vertex_invariant(g, v):
    nbrs = g.neighbors(v)
    return (g.degree(v), len(nbrs), tuple(sorted(m for _, m in nbrs)))


def _are_twins(mat, v, w):
    # swapping v and w is an automorphism iff they agree on every
    # other vertex
    rv = mat[v]
    rw = mat[w]
    return all(
        rv[x] == rw[x] for x in range(len(mat)) if x != v and x != w
    )


def canonical_key(g, limit=CANONICAL_LIMIT):
    """Return a bytes key such that two graphs get equal keys if and
    only if they are isomorphic.

    The key is the lexicographically smallest serialization of the
    multiplicity matrix (upper triangle, column by column) over all
    vertex orders that sort vertices by a degree-based invariant.  The
    search backtracks, cutting any prefix already larger than the best
    one and trying only one of each pair of interchangeable (twin)
    vertices.
    """
    n = g.vertex_count
    if n > limit:
        raise TooLargeToCanonicalize(
            f'{n} vertices exceed the canonicalization limit of {limit}'
        )
    mat = [[0] * n for _ in range(n)]
    for u, v, m in g.edges():
        mat[u][v] = mat[v][u] = m
    inv = [_vertex_invariant(g, v) for v in range(n)]
    slots = sorted(inv)
    placed = []
    used = [False] * n
    best = None

    def search(pos, prefix):
        nonlocal best
        if pos == n:
            if best is None or prefix < best:
                best = prefix
            return
        tried = []
        for v in range(n):
            if used[v] or inv[v] != slots[pos]:
                continue
            if any(_are_twins(mat, v, w) for w in tried):
                continue
            tried.append(v)
            new = prefix + tuple(mat[placed[i]][v] for i in range(pos))
            if best is not None and new > best[: len(new)]:
                continue
            placed.append(v)
            used[v] = True
            search(pos + 1, new)
            placed.pop()
            used[v] = False

    search(0, ())
    return f"{n}:{','.join(map(str, best))}".encode('ascii')


class MemoCache:
    """Map from canonical keys to counts, safe to share between
    threads.  Concurrent writers of the same key store the same value,
    so a lost update only costs a recomputation.
    """

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key):
        with self._lock:
            try:
                value = self._data[key]
            except KeyError:
                self.misses += 1
                return None
            self.hits += 1
            return value

    def put(self, key, value):
        with self._lock:
            self._data[key] = value

    def __len__(self):
        with self._lock:
            return len(self._data)


# ===================================================================
# --- recursive counter
# ===================================================================


class _Frame:
    """A subproblem waiting for the counts of its subgraphs: their
    product, or their weighted sum when coefficients are given, times
    scale.
    """

    __slots__ = ('coefficients', 'graphs', 'key', 'scale', 'values')

    def __init__(self, key, graphs, coefficients=None, scale=1):
        self.key = key
        self.graphs = graphs
        self.coefficients = coefficients
        self.scale = scale
        self.values = []

    def result(self):
        if self.coefficients is None:
            return self.scale * math.prod(self.values)
        return self.scale * sum(
            c * v for c, v in zip(self.coefficients, self.values)
        )


class DeletionCounter:
    """Counts spanning trees by recursive vertex deletion.

    All tunables are class attributes, overridable per instance:

     - (PivotStrategy) strategy: how the expansion vertex is chosen
       among the non-cut vertices (default MIN_DEGREE, the smallest
       neighborhood, which minimizes the 2 ** |N(u)| branching).

     - (bool) memoize: share results between isomorphic subproblems.

     - (int) oracle_floor: graphs with at most this many vertices are
       handed to matrix_tree_count(); 0 means pure deletion.

     - (int) canonical_limit: graphs larger than this skip the cache.

     - (int) neighborhood_limit: NeighborhoodTooLarge is raised for a
       pivot with more neighbors than this.
    """

    strategy = PivotStrategy.MIN_DEGREE
    memoize = True
    oracle_floor = 5
    canonical_limit = CANONICAL_LIMIT
    neighborhood_limit = 20

    def __init__(
        self,
        strategy=None,
        memoize=None,
        oracle_floor=None,
        canonical_limit=None,
        neighborhood_limit=None,
        cache=None,
    ):
        if strategy is not None:
            self.strategy = PivotStrategy(strategy)
        if memoize is not None:
            self.memoize = memoize
        if oracle_floor is not None:
            self.oracle_floor = oracle_floor
        if canonical_limit is not None:
            self.canonical_limit = canonical_limit
        if neighborhood_limit is not None:
            self.neighborhood_limit = neighborhood_limit
        if cache is None and self.memoize:
            cache = MemoCache()
        self.cache = cache if self.memoize else None
        self.expansions = 0

    def choose_pivot(self, g):
        """Pick a non-cut vertex according to self.strategy."""
        candidates = g.non_cut_vertices()
        if self.strategy is PivotStrategy.FIRST_NON_CUT:
            return candidates[0]
        sizes = {u: len(g.neighbors(u)) for u in candidates}
        if self.strategy is PivotStrategy.MAX_DEGREE:
            return max(candidates, key=lambda u: (sizes[u], -u))
        return min(candidates, key=lambda u: (sizes[u], u))

    def _key(self, g):
        if self.cache is None:
            return None
        try:
            return canonical_key(g, self.canonical_limit)
        except TooLargeToCanonicalize:
            debug("too large to canonicalize, not cached", g)
            return None

    def count(self, g):
        """Return t(g).

        Pending subproblems live on an explicit stack, not the Python
        call stack: the depth of the expansion is not bounded by the
        interpreter recursion limit.
        """
        stack = []
        value = self._enter(g, stack)
        while stack:
            frame = stack[-1]
            if len(frame.values) < len(frame.graphs):
                child = frame.graphs[len(frame.values)]
                value = self._enter(child, stack)
                if value is not None:
                    frame.values.append(value)
                continue
            stack.pop()
            value = frame.result()
            if frame.key is not None:
                self.cache.put(frame.key, value)
            if stack:
                stack[-1].values.append(value)
        return value

    def _enter(self, g, stack):
        """Return t(g) if it is known without expanding, else push the
        frame which reduces g onto the stack and return None.
        """
        if not g.is_connected():
            return 0
        n = g.vertex_count
        if n == 1:
            return 1
        if n == 2:
            return g.multiplicity(0, 1)
        if n <= self.oracle_floor:
            return matrix_tree_count(g)

        key = self._key(g)
        if key is not None:
            value = self.cache.get(key)
            if value is not None:
                debug(f"memo hit, t = {value}", g)
                return value
        stack.append(self._reduce(g, key))
        return None

    @staticmethod
    def _strip_pendants(g):
        """Peel pendant vertices off g, including those which become
        pendant as others go, until none is left or two vertices
        remain.  Return the product of the peeled multiplicities and
        what is left of g.
        """
        left = {u: len(g.neighbors(u)) for u in g.vertices()}
        queue = [u for u, size in left.items() if size == 1]
        scale = 1
        while queue and len(left) > 2:
            u = queue.pop()
            ((v, a),) = [(v, a) for v, a in g.neighbors(u) if v in left]
            scale *= a
            del left[u]
            left[v] -= 1
            if left[v] == 1:
                queue.append(v)
        if len(left) == g.vertex_count:
            return 1, g
        return scale, g.induced_subgraph(left)

    def _reduce(self, g, key):
        scale, core = self._strip_pendants(g)
        if core is not g:
            debug(f"stripped {g.vertex_count - core.vertex_count} pendants", g)
            return _Frame(key, [core], scale=scale)

        blocks = g.block_decomposition()
        if len(blocks) > 1:
            debug(f"splitting into {len(blocks)} blocks", g)
            return _Frame(key, blocks)

        u = self.choose_pivot(g)
        size = len(g.neighbors(u))
        if size > self.neighborhood_limit:
            raise NeighborhoodTooLarge(
                f"pivot {u} has {size} neighbors, more than the limit of "
                f"{self.neighborhood_limit}"
            )
        debug(f"expanding at vertex {u} ({size} neighbors)", g)
        self.expansions += 1
        terms = expand_at(g, u)
        return _Frame(
            key,
            [term.graph for term in terms],
            coefficients=[term.coefficient for term in terms],
        )


def count_by_deletion(
    g, strategy=PivotStrategy.MIN_DEGREE, memo=True, pure=False
):
    """t(g) through the vertex deletion recursion.  With pure=True the
    recursion never hands small graphs to the determinant oracle.
    """
    counter = DeletionCounter(
        strategy=strategy,
        memoize=memo,
        oracle_floor=0 if pure else None,
    )
    return counter.count(g)
