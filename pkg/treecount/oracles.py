# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.

"""Ground-truth spanning tree counters.

Two independent ways of computing t(G), used to check the deletion
engine and every closed-form formula:

 - matrix_tree_count(): Kirchhoff's theorem, a Laplacian cofactor
   evaluated exactly with Bareiss' fraction-free elimination.

 - brute_force_count(): enumerate every (n-1)-subset of the support
   edges and add up the multiplicity products of those forming a
   spanning tree.  Refuses to run past a subset budget.
"""

import itertools
import math
import os

from .log import debug
from .log import logger


__all__ = [
    'BRUTE_FORCE_BUDGET',
    'IntMatrix',
    'OracleError',
    'ResourceBudgetExceeded',
    'TooLargeForBruteForce',
    'brute_force_candidates',
    'brute_force_count',
    'det_bareiss',
    'get_brute_force_budget',
    'laplacian',
    'matrix_tree_count',
]

# Default maximum number of candidate edge subsets brute_force_count()
# is allowed to examine. Overridden by $TREECOUNT_BRUTE_BUDGET.
BRUTE_FORCE_BUDGET = 10**7
BUDGET_ENV_VAR = 'TREECOUNT_BRUTE_BUDGET'


# ===================================================================
# --- exceptions
# ===================================================================


class ResourceBudgetExceeded(Exception):
    """Base for every error raised because a configured size or cost
    limit would be exceeded.
    """


class OracleError(Exception):
    """Base class for oracle exceptions."""


class TooLargeForBruteForce(OracleError, ResourceBudgetExceeded):
    """Raised when brute force enumeration would exceed its budget."""


# ===================================================================
# --- matrices
# ===================================================================


class IntMatrix:
    """A dense square matrix of Python integers."""

    __slots__ = ('rows',)

    def __init__(self, rows):
        rows = tuple(tuple(row) for row in rows)
        for row in rows:
            if len(row) != len(rows):
                raise ValueError(f"matrix is not square: {rows!r}")
        self.rows = rows

    @classmethod
    def identity(cls, order):
        return cls(
            [[int(i == j) for j in range(order)] for i in range(order)]
        )

    @property
    def order(self):
        return len(self.rows)

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def minor(self, k):
        """The matrix with row k and column k removed."""
        return IntMatrix(
            [r[:k] + r[k + 1 :] for i, r in enumerate(self.rows) if i != k]
        )

    def tolist(self):
        return [list(row) for row in self.rows]

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.tolist()!r})"


def laplacian(g):
    """L[i][i] = weighted degree of i, L[i][j] = -multiplicity(i, j)."""
    n = g.vertex_count
    rows = [[0] * n for _ in range(n)]
    for u, v, m in g.edges():
        rows[u][v] = rows[v][u] = -m
        rows[u][u] += m
        rows[v][v] += m
    return IntMatrix(rows)


def det_bareiss(matrix):
    """Exact determinant by Bareiss' fraction-free elimination.

    Every division performed is exact, so all intermediate values
    stay integers.  The pivot is the first nonzero entry of the
    current column; a column with no nonzero entry left means a zero
    determinant.  The 0x0 matrix has determinant 1.
    """
    if isinstance(matrix, IntMatrix):
        rows = matrix.tolist()
    else:
        rows = [list(row) for row in matrix]
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def matrix_tree_count(g):
    """t(g) as the determinant of the Laplacian with row and column 0
    removed.  1 for the single vertex graph, 0 when g is disconnected.
    """
    if g.vertex_count == 1:
        return 1
    return det_bareiss(laplacian(g).minor(0))


# ===================================================================
# --- brute force
# ===================================================================


def get_brute_force_budget():
    """The subset budget: $TREECOUNT_BRUTE_BUDGET if set to a valid
    integer, else BRUTE_FORCE_BUDGET.
    """
    value = os.environ.get(BUDGET_ENV_VAR)
    if value is None:
        return BRUTE_FORCE_BUDGET
    try:
        return int(value)
    except ValueError:
        logger.warning(
            "ignoring invalid %s=%r; using %d",
            BUDGET_ENV_VAR,
            value,
            BRUTE_FORCE_BUDGET,
        )
        return BRUTE_FORCE_BUDGET


def brute_force_candidates(g):
    """Number of edge subsets brute_force_count(g) would examine."""
    return math.comb(g.support_size, g.vertex_count - 1)


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _is_spanning_tree(n, subset):
    # n - 1 edges without a cycle on n vertices form a spanning tree
    parent = list(range(n))
    for u, v, _ in subset:
        ru = _find(parent, u)
        rv = _find(parent, v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def brute_force_count(g, budget=None):
    """t(g) by exhaustive enumeration of (n-1)-subsets of the support
    edges.  Each subset which is a spanning tree contributes the
    product of its edge multiplicities.

    TooLargeForBruteForce is raised if the number of subsets exceeds
    budget (default: get_brute_force_budget()).
    """
    if budget is None:
        budget = get_brute_force_budget()
    candidates = brute_force_candidates(g)
    if candidates > budget:
        raise TooLargeForBruteForce(
            f"{candidates} candidate edge subsets exceed the brute force "
            f"budget of {budget}"
        )
    debug(f"brute force over {candidates} edge subsets", g)
    n = g.vertex_count
    total = 0
    for subset in itertools.combinations(g.edges(), n - 1):
        if _is_spanning_tree(n, subset):
            total += math.prod(m for _, _, m in subset)
    return total
