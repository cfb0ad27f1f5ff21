# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.

"""Undirected multigraphs stored as a vertex count plus a symmetric
edge-multiplicity map.

Vertices are the integers 0 .. vertex_count - 1.  Every operation
returns a new graph; after a vertex deletion or an identification the
survivors are re-indexed densely, keeping their relative order.  No id
stability is promised across such operations.

Self-loops never take part in a spanning tree, so they are dropped when
a graph is built from an edge list and when an identification turns an
internal edge into a loop.  add_edges() refuses them outright.
"""

import collections

import networkx as nx

from .log import debug


__all__ = [
    'ExpansionTerm',
    'GraphError',
    'InvalidMultiplicity',
    'InvalidVertex',
    'MultiGraph',
    'NotConnected',
    'NothingToIdentify',
    'SelfLoopRejected',
    'WouldEmptyGraph',
]


# ===================================================================
# --- exceptions
# ===================================================================


class GraphError(Exception):
    """Base class for multigraph exceptions."""


class SelfLoopRejected(GraphError, ValueError):
    """Raised when asked to add an edge from a vertex to itself."""


class InvalidVertex(GraphError, ValueError):
    """Raised when a vertex id is not in [0, vertex_count)."""


class InvalidMultiplicity(GraphError, ValueError):
    """Raised when an edge multiplicity is not a positive integer."""


class WouldEmptyGraph(GraphError, ValueError):
    """Raised when an operation would leave a graph with no vertices."""


class NothingToIdentify(GraphError, ValueError):
    """Raised when fewer than two vertices are passed for identification."""


class NotConnected(GraphError):
    """Raised by operations which require a connected graph."""


# One summand of the vertex deletion formula: coefficient * t(graph).
ExpansionTerm = collections.namedtuple(
    'ExpansionTerm', ['coefficient', 'graph']
)


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


# ===================================================================
# --- multigraph
# ===================================================================


class MultiGraph:
    """An immutable undirected multigraph.

     - (int) vertex_count: number of vertices, at least 1.

     - (iterable) edges: (u, v, mult) triples.  Repeated pairs
       accumulate their multiplicities; triples with u == v are
       dropped.

    >>> g = MultiGraph(3, [(0, 1, 2), (1, 2, 1)])
    >>> g.neighbors(1)
    [(0, 2), (2, 1)]
    """

    __slots__ = ('_adj', '_hash', '_mult', '_n')

    def __init__(self, vertex_count, edges=()):
        if not _is_int(vertex_count):
            raise TypeError(
                f'vertex count must be an integer, got {vertex_count!r}'
            )
        if vertex_count < 1:
            raise WouldEmptyGraph(
                f'a graph needs at least one vertex, got {vertex_count!r}'
            )
        self._n = vertex_count
        mult = {}
        for u, v, m in edges:
            self._check_vertex(u)
            self._check_vertex(v)
            self._check_multiplicity(m)
            if u == v:
                debug(f"dropping self-loop on vertex {u} (x{m})")
                continue
            key = (u, v) if u < v else (v, u)
            mult[key] = mult.get(key, 0) + m
        self._mult = mult
        adj = [{} for _ in range(vertex_count)]
        for (u, v), m in mult.items():
            adj[u][v] = m
            adj[v][u] = m
        self._adj = adj
        self._hash = None

    @classmethod
    def from_edges(cls, vertex_count, edges):
        """Alias of the constructor, reading better at call sites
        which build a graph out of a parsed edge list.
        """
        return cls(vertex_count, edges)

    @classmethod
    def complete(cls, n):
        """K_n with unit multiplicities."""
        return cls(n, [(u, v, 1) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def banana(cls, m):
        """B_m: two vertices joined by m parallel edges."""
        return cls(2, [(0, 1, m)])

    @classmethod
    def path(cls, n):
        return cls(n, [(i, i + 1, 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n):
        return cls(n, [(i, (i + 1) % n, 1) for i in range(n)])

    # --- validation

    def _check_vertex(self, u):
        if not _is_int(u) or not 0 <= u < self._n:
            raise InvalidVertex(
                f'no such vertex {u!r} (vertex count is {self._n})'
            )

    @staticmethod
    def _check_multiplicity(m):
        if not _is_int(m) or m < 1:
            raise InvalidMultiplicity(
                f'multiplicity must be a positive integer, got {m!r}'
            )

    # --- accessors

    @property
    def vertex_count(self):
        return self._n

    @property
    def support_size(self):
        """Number of vertex pairs joined by at least one edge."""
        return len(self._mult)

    @property
    def total_multiplicity(self):
        """Number of edges, counted with multiplicity."""
        return sum(self._mult.values())

    def vertices(self):
        return range(self._n)

    def multiplicity(self, u, v):
        self._check_vertex(u)
        self._check_vertex(v)
        return self._adj[u].get(v, 0)

    def neighbors(self, u):
        """List of (vertex, multiplicity) pairs adjacent to u, in
        ascending vertex order.
        """
        self._check_vertex(u)
        return sorted(self._adj[u].items())

    def degree(self, u):
        """Weighted degree: sum of the multiplicities incident to u."""
        self._check_vertex(u)
        return sum(self._adj[u].values())

    def edges(self):
        """Sorted list of (u, v, mult) triples with u < v."""
        return [(u, v, m) for (u, v), m in sorted(self._mult.items())]

    # --- derived graphs

    def add_edges(self, u, v, mult=1):
        """Return a copy of this graph with multiplicity(u, v)
        increased by mult.
        """
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoopRejected(f'self-loop on vertex {u!r} rejected')
        self._check_multiplicity(mult)
        return MultiGraph(self._n, [*self.edges(), (u, v, mult)])

    def delete_vertex(self, u):
        """Return G - u: u and its incident edges removed, higher ids
        shifted down by one.
        """
        self._check_vertex(u)
        if self._n == 1:
            raise WouldEmptyGraph(f"can't delete the last vertex {u!r}")
        edges = [
            (a - (a > u), b - (b > u), m)
            for a, b, m in self.edges()
            if u not in (a, b)
        ]
        return MultiGraph(self._n - 1, edges)

    def identify_vertices(self, s):
        """Merge all vertices of s into one.

        The merged vertex takes the place of the smallest id in s.
        Multiplicities from an outside vertex to the members of s are
        summed; edges between members of s become loops and are
        dropped.
        """
        s = set(s)
        if len(s) < 2:
            raise NothingToIdentify(
                f'need at least two vertices to identify, got {sorted(s)!r}'
            )
        for u in s:
            self._check_vertex(u)
        keep = min(s)
        index = {}
        shift = 0
        for v in range(self._n):
            if v in s and v != keep:
                shift += 1
            else:
                index[v] = v - shift
        for v in s:
            index[v] = index[keep]
        edges = [(index[a], index[b], m) for a, b, m in self.edges()]
        return MultiGraph(self._n - len(s) + 1, edges)

    def relabel(self, perm):
        """Return the isomorphic graph in which vertex v becomes
        perm[v].  perm must be a permutation of range(vertex_count).
        """
        if sorted(perm) != list(range(self._n)):
            raise InvalidVertex(f'{perm!r} is not a permutation')
        return MultiGraph(
            self._n, [(perm[u], perm[v], m) for u, v, m in self.edges()]
        )

    def induced_subgraph(self, vertices):
        """Subgraph induced by vertices, re-indexed in ascending order."""
        vertices = sorted(set(vertices))
        for u in vertices:
            self._check_vertex(u)
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[a], index[b], m)
            for a, b, m in self.edges()
            if a in index and b in index
        ]
        return MultiGraph(len(vertices), edges)

    # --- structure

    def support_graph(self):
        """networkx.Graph on the same vertices, one edge per adjacent
        pair, carrying the multiplicity as the 'mult' attribute.
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(
            (u, v, {'mult': m}) for u, v, m in self.edges()
        )
        return graph

    def is_connected(self):
        if self._n == 1:
            return True
        if len(self._mult) < self._n - 1:
            return False
        return nx.is_connected(self.support_graph())

    def _require_connected(self):
        if not self.is_connected():
            raise NotConnected(f'{self!r} is not connected')

    def cut_vertices(self):
        """Sorted list of the vertices whose removal disconnects G."""
        self._require_connected()
        if self._n == 1:
            return []
        return sorted(nx.articulation_points(self.support_graph()))

    def non_cut_vertices(self):
        """Sorted list of the vertices u such that G - u is connected.
        A connected graph with two or more vertices always has at least
        two of them.
        """
        cut = set(self.cut_vertices())
        return [u for u in range(self._n) if u not in cut]

    def block_decomposition(self):
        """Biconnected blocks of G as separate graphs, cut vertices
        replicated into every block containing them.  Blocks are
        ordered by their smallest original vertex ids.
        """
        self._require_connected()
        if self._n == 1:
            return [self]
        blocks = sorted(
            sorted(c) for c in nx.biconnected_components(self.support_graph())
        )
        return [self.induced_subgraph(vs) for vs in blocks]

    # --- dunder methods

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._n == other._n and self._mult == other._mult

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, tuple(sorted(self._mult.items()))))
        return self._hash

    def __repr__(self):
        return (
            f"<{self.__class__.__name__}(vertices={self._n}, "
            f"edges={self.edges()!r})>"
        )

    def __getstate__(self):
        return (self._n, self.edges())

    def __setstate__(self, state):
        n, edges = state
        self.__init__(n, edges)
