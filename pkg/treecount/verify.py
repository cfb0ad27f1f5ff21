# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.

"""
Cross-checks every family formula against the independent counters
over a parameter grid.

For each grid point the following counts are computed and must all be
equal:

 - the closed-form formula
 - the proof recurrence (families which have one)
 - matrix_tree_count() of the built graph
 - count_by_deletion() of the built graph
 - brute_force_count() of the built graph, when within budget

Three runners are provided, differing only in how grid points are
dispatched:

 - Verifier: one point after another in the calling thread
 - ThreadedVerifier: a pool of threads
 - MultiprocessVerifier: a pool of processes

Results are always gathered in grid order, so the report does not
depend on the runner used.
"""

import collections
import concurrent.futures
import functools
import itertools

from .deletion import DeletionCounter
from .families import FAMILIES
from .families import Bipartite
from .families import Complete
from .families import Cone
from .families import GeneralizedBipartite
from .families import HalfCone
from .families import ModifiedBipartite
from .families import Multipartite
from .log import debug
from .log import logger
from .oracles import brute_force_candidates
from .oracles import brute_force_count
from .oracles import get_brute_force_budget
from .oracles import matrix_tree_count


__all__ = [
    'DEFAULT_BOUNDS',
    'GridResult',
    'MultiprocessVerifier',
    'ThreadedVerifier',
    'Verifier',
    'VerifyReport',
    'check_spec',
    'grid_specs',
    'render_table',
]

# Upper bounds of the default grid, per family.  "n" is the p side (the
# order of K_n, the part size for multipartite graphs), "m" the q side
# (or the number of parts), "k" every multiplicity parameter.
DEFAULT_BOUNDS = {
    'complete': {'n': 8},
    'bipartite': {'m': 4, 'n': 4},
    'cone': {'m': 4, 'n': 5},
    'modified-bipartite': {'k': 3, 'm': 4, 'n': 4},
    'generalized-bipartite': {'k': 3, 'm': 3, 'n': 4},
    'half-cone': {'k': 3, 'm': 3, 'n': 3},
    'multipartite': {'m': 3, 'n': 3},
}


def _bounds(family, max_n, max_m, max_k):
    bounds = dict(DEFAULT_BOUNDS[family])
    for key, value in (('n', max_n), ('m', max_m), ('k', max_k)):
        if value is not None and key in bounds:
            bounds[key] = value
    return bounds


def _multiplicity_lists(max_m, max_k):
    for m in range(1, max_m + 1):
        yield from itertools.product(range(1, max_k + 1), repeat=m)


def _family_grid(family, b):
    if family == 'complete':
        for n in range(1, b['n'] + 1):
            yield Complete(n)
    elif family == 'bipartite':
        for m in range(1, b['m'] + 1):
            for n in range(1, b['n'] + 1):
                yield Bipartite(m, n)
    elif family == 'cone':
        for m in range(1, b['m'] + 1):
            for n in range(b['n'] + 1):
                yield Cone(m, n)
    elif family == 'modified-bipartite':
        for k, m, n in itertools.product(
            range(1, b['k'] + 1), range(1, b['m'] + 1), range(1, b['n'] + 1)
        ):
            yield ModifiedBipartite(k, m, n)
    elif family == 'generalized-bipartite':
        for ks in _multiplicity_lists(b['m'], b['k']):
            for n in range(1, b['n'] + 1):
                yield GeneralizedBipartite(ks, n)
    elif family == 'half-cone':
        for k in range(1, b['k'] + 1):
            for ks in _multiplicity_lists(b['m'], b['k']):
                for n in range(1, b['n'] + 1):
                    yield HalfCone(k, ks, n)
    elif family == 'multipartite':
        for count in range(2, b['m'] + 1):
            for parts in itertools.combinations_with_replacement(
                range(1, b['n'] + 1), count
            ):
                yield Multipartite(parts)
    else:
        raise ValueError(f"unknown family {family!r}")


def grid_specs(families=None, max_n=None, max_m=None, max_k=None):
    """The ordered list of family specs to verify.  Bounds left as
    None take their DEFAULT_BOUNDS value.
    """
    if families is None:
        families = list(FAMILIES)
    specs = []
    for family in families:
        if family not in FAMILIES:
            raise ValueError(
                f"unknown family {family!r}; choose from "
                f"{', '.join(FAMILIES)}"
            )
        bounds = _bounds(family, max_n, max_m, max_k)
        specs.extend(_family_grid(family, bounds))
    return specs


# ===================================================================
# --- single grid point
# ===================================================================


class GridResult(
    collections.namedtuple(
        'GridResult', ['spec', 'counts', 'brute_force_skipped']
    )
):
    """Counts computed for one spec, keyed by method name."""

    __slots__ = ()

    @property
    def ok(self):
        return len(set(self.counts.values())) == 1

    def describe(self):
        counts = ", ".join(f"{k}={v}" for k, v in self.counts.items())
        return f"{self.spec.label} {self.spec.to_text()}: {counts}"


def check_spec(spec, brute_force=True, budget=None):
    """Count spec with every available method."""
    counts = {'formula': spec.count_formula()}
    if spec.name != 'multipartite':
        counts['recurrence'] = spec.count_recurrence()
    g = spec.build()
    counts['matrix-tree'] = matrix_tree_count(g)
    counts['deletion'] = DeletionCounter().count(g)
    skipped = False
    if brute_force:
        if budget is None:
            budget = get_brute_force_budget()
        if brute_force_candidates(g) <= budget:
            counts['brute-force'] = brute_force_count(g, budget=budget)
        else:
            logger.warning(
                "skipping brute force check of %s: too many edge subsets",
                spec.label,
            )
            skipped = True
    debug(f"checked {spec.label}: {counts!r}")
    return GridResult(spec, counts, skipped)


# ===================================================================
# --- report
# ===================================================================


class VerifyReport:
    """Per-family tallies plus the list of mismatching grid points."""

    def __init__(self):
        self.checked = collections.Counter()
        self.passed = collections.Counter()
        self.skipped = collections.Counter()
        self.discrepancies = []

    def add(self, result):
        family = result.spec.name
        self.checked[family] += 1
        if result.brute_force_skipped:
            self.skipped[family] += 1
        if result.ok:
            self.passed[family] += 1
        else:
            self.discrepancies.append(result)

    @property
    def ok(self):
        return not self.discrepancies

    def families(self):
        return list(self.checked)


def render_table(report):
    header = ("family", "checked", "passed", "failed", "bf-skipped")
    rows = [header]
    for family in report.families():
        checked = report.checked[family]
        passed = report.passed[family]
        rows.append((
            family,
            str(checked),
            str(passed),
            str(checked - passed),
            str(report.skipped[family]),
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = [
        "  ".join(
            cell.ljust(w) if i == 0 else cell.rjust(w)
            for i, (cell, w) in enumerate(zip(row, widths))
        )
        for row in rows
    ]
    for result in report.discrepancies:
        lines.append("MISMATCH " + result.describe())
    return "\n".join(lines) + "\n"


# ===================================================================
# --- runners
# ===================================================================


class Verifier:
    """Runs check_spec() over a list of specs.

     - (bool) brute_force: also run the brute force oracle where the
       number of edge subsets is within budget.

     - (int) budget: brute force subset budget (None: the configured
       default).
    """

    brute_force = True
    budget = None
    # the serial runner always uses one
    workers = 1

    def __init__(self, brute_force=None, budget=None):
        if brute_force is not None:
            self.brute_force = brute_force
        if budget is not None:
            self.budget = budget

    def _map(self, fun, specs):
        return map(fun, specs)

    def run(self, specs):
        fun = functools.partial(
            check_spec, brute_force=self.brute_force, budget=self.budget
        )
        report = VerifyReport()
        for result in self._map(fun, specs):
            report.add(result)
        logger.info(
            "verified %d grid points, %d discrepancies",
            sum(report.checked.values()),
            len(report.discrepancies),
        )
        return report


class _PoolVerifier(Verifier):
    workers = None
    _executor_class = None

    def __init__(self, brute_force=None, budget=None, workers=None):
        Verifier.__init__(self, brute_force=brute_force, budget=budget)
        if workers is not None:
            self.workers = workers

    def _map(self, fun, specs):
        with self._executor_class(max_workers=self.workers) as executor:
            # map() yields in submission order
            return list(executor.map(fun, specs))


class ThreadedVerifier(_PoolVerifier):
    """A Verifier dispatching grid points to a thread pool."""

    _executor_class = concurrent.futures.ThreadPoolExecutor


class MultiprocessVerifier(_PoolVerifier):
    """A Verifier dispatching grid points to a process pool."""

    _executor_class = concurrent.futures.ProcessPoolExecutor
