# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.

"""
Count spanning trees from the command line, as in:

$ python3 -m treecount family cone -m 3 -n 3 --method deletion
$ python3 -m treecount count graph.txt --method matrix-tree
$ python3 -m treecount verify --families cone --max-n 5
$ python3 -m treecount verify --workers 4 --threads
$ python3 -m treecount export half-cone:k=2:ks=1,3:n=3 --format dot

Exit status: 0 success, 1 verification mismatch, 2 usage or parse
error, 3 resource budget exceeded.  Reports go to stdout, warnings and
errors to stderr.
"""

import argparse
import collections
import json
import logging
import os
import sys
import time

from . import __ver__
from .deletion import DeletionCounter
from .deletion import PivotStrategy
from .families import FAMILIES
from .families import Bipartite
from .families import Complete
from .families import Cone
from .families import FamilyError
from .families import GeneralizedBipartite
from .families import HalfCone
from .families import ModifiedBipartite
from .families import Multipartite
from .families import parse_family_spec
from .formats import EdgeListParseError
from .formats import dump_dot
from .formats import dump_edge_list
from .formats import dump_json
from .formats import load_edge_list
from .log import config_logging
from .log import logger
from .oracles import ResourceBudgetExceeded
from .oracles import brute_force_count
from .oracles import matrix_tree_count
from .verify import MultiprocessVerifier
from .verify import ThreadedVerifier
from .verify import Verifier
from .verify import grid_specs
from .verify import render_table


EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

METHODS = ('formula', 'deletion', 'matrix-tree', 'brute-force', 'recurrence')
GRAPH_METHODS = ('deletion', 'matrix-tree', 'brute-force')
FORMATS = ('dot', 'edge-list', 'json')

# family name -> (constructor, [(option dest, flag), ...])
_FAMILY_ARGS = {
    'complete': (Complete, [('n', '-n')]),
    'bipartite': (Bipartite, [('m', '-m'), ('n', '-n')]),
    'cone': (Cone, [('m', '-m'), ('n', '-n')]),
    'modified-bipartite': (
        ModifiedBipartite,
        [('k', '-k'), ('m', '-m'), ('n', '-n')],
    ),
    'generalized-bipartite': (
        GeneralizedBipartite,
        [('ks', '--ks'), ('n', '-n')],
    ),
    'half-cone': (HalfCone, [('k', '-k'), ('ks', '--ks'), ('n', '-n')]),
    'multipartite': (Multipartite, [('parts', '--parts')]),
}


class CountReport(
    collections.namedtuple(
        'CountReport',
        [
            'vertices',
            'support_edges',
            'total_multiplicity',
            'method',
            'count',
            'elapsed',
        ],
    )
):
    """The result of one count.  `count` is the full decimal string,
    `elapsed` is in milliseconds.
    """

    __slots__ = ()

    def to_text(self):
        return (
            f"graph: {self.vertices} vertices, {self.support_edges} "
            f"adjacent pairs, {self.total_multiplicity} edges\n"
            f"method: {self.method}\n"
            f"count: {self.count}\n"
            f"elapsed: {self.elapsed:.3f} ms"
        )

    def to_json(self):
        return json.dumps(self._asdict(), indent=2)


def _int_list(value):
    try:
        return tuple(int(x) for x in value.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma separated integers, got {value!r}"
        )


def _family_list(value):
    names = [x for x in value.split(',') if x]
    for name in names:
        if name not in FAMILIES:
            raise argparse.ArgumentTypeError(
                f"unknown family {name!r} (choose from "
                f"{', '.join(FAMILIES)})"
            )
    return names


def count_graph(g, method, options):
    """Count g with one of the graph based methods."""
    if method == 'matrix-tree':
        return matrix_tree_count(g)
    if method == 'deletion':
        counter = DeletionCounter(
            strategy=options.strategy,
            memoize=not options.no_memo,
            oracle_floor=0 if options.pure_deletion else None,
        )
        return counter.count(g)
    if method == 'brute-force':
        return brute_force_count(g, budget=options.brute_budget)
    raise ValueError(f"method {method!r} needs a family, not a graph")


def _report(g_or_spec, method, count, started):
    return CountReport(
        g_or_spec.vertex_count,
        g_or_spec.support_size,
        g_or_spec.total_multiplicity,
        method,
        str(count),
        (time.perf_counter() - started) * 1000,
    )


def _print_report(report, options):
    print(report.to_json() if options.json else report.to_text())


def _spec_from_options(options, parser):
    klass, args = _FAMILY_ARGS[options.family]
    values = []
    for dest, flag in args:
        value = getattr(options, dest)
        if value is None:
            parser.error(f"{options.family} requires {flag}")
        values.append(value)
    try:
        return klass(*values)
    except FamilyError as err:
        parser.error(str(err))


# ===================================================================
# --- commands
# ===================================================================


def cmd_family(options, parser):
    spec = _spec_from_options(options, parser)
    started = time.perf_counter()
    method = options.method
    if method == 'formula':
        count = spec.count_formula()
        report = _report(spec, method, count, started)
    elif method == 'recurrence':
        try:
            count = spec.count_recurrence()
        except FamilyError as err:
            parser.error(str(err))
        report = _report(spec, method, count, started)
    else:
        g = spec.build()
        logger.info("built %s: %r", spec.label, g)
        report = _report(g, method, count_graph(g, method, options), started)
    _print_report(report, options)
    return EXIT_OK


def cmd_count(options, parser):
    if options.method not in GRAPH_METHODS:
        parser.error(
            f"method {options.method!r} needs a family; use one of "
            f"{', '.join(GRAPH_METHODS)} for graph files"
        )
    try:
        g = load_edge_list(options.path)
    except EdgeListParseError as err:
        parser.exit(EXIT_USAGE, f"{parser.prog}: {options.path}: {err}\n")
    except OSError as err:
        parser.exit(EXIT_USAGE, f"{parser.prog}: {err}\n")
    started = time.perf_counter()
    count = count_graph(g, options.method, options)
    _print_report(_report(g, options.method, count, started), options)
    return EXIT_OK


def cmd_verify(options, parser):
    specs = grid_specs(
        families=options.families,
        max_n=options.max_n,
        max_m=options.max_m,
        max_k=options.max_k,
    )
    kwargs = {
        'brute_force': not options.no_brute_force,
        'budget': options.brute_budget,
    }
    if options.workers > 1:
        klass = ThreadedVerifier if options.threads else MultiprocessVerifier
        verifier = klass(workers=options.workers, **kwargs)
    else:
        verifier = Verifier(**kwargs)
    report = verifier.run(specs)
    sys.stdout.write(render_table(report))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_export(options, parser):
    labels = None
    if os.path.exists(options.source):
        try:
            g = load_edge_list(options.source)
        except EdgeListParseError as err:
            parser.exit(
                EXIT_USAGE, f"{parser.prog}: {options.source}: {err}\n"
            )
        except OSError as err:
            parser.exit(EXIT_USAGE, f"{parser.prog}: {err}\n")
    else:
        try:
            spec = parse_family_spec(options.source)
        except FamilyError as err:
            parser.error(
                f"{options.source!r} is neither a file nor a family "
                f"spec: {err}"
            )
        g = spec.build()
        labels = spec.vertex_labels()

    if options.format == 'dot':
        text = dump_dot(g, labels=labels)
    elif options.format == 'json':
        text = dump_json(g)
    else:
        text = dump_edge_list(g)

    if options.output:
        with open(options.output, 'w', encoding='utf8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ===================================================================
# --- parser
# ===================================================================


def _add_method_options(parser, default):
    parser.add_argument(
        '--method',
        choices=METHODS,
        default=default,
        help=f"counting method (default {default})",
    )
    parser.add_argument(
        '--strategy',
        choices=[s.value for s in PivotStrategy],
        default=PivotStrategy.MIN_DEGREE.value,
        help="pivot strategy of the deletion method (default min-degree)",
    )
    parser.add_argument(
        '--no-memo',
        action='store_true',
        help="don't share results between isomorphic subproblems",
    )
    parser.add_argument(
        '--pure-deletion',
        action='store_true',
        help="never hand small graphs to the determinant",
    )
    parser.add_argument(
        '--brute-budget',
        type=int,
        default=None,
        metavar="N",
        help="max edge subsets examined by brute force",
    )
    parser.add_argument(
        '--json', action='store_true', help="print the report as JSON"
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog='treecount',
        description="Exact spanning tree counting for multigraphs.",
    )
    parser.add_argument(
        '-D', '--debug', action='store_true', help="enable DEBUG logging level"
    )
    parser.add_argument(
        '-V',
        '--verbose',
        action='store_true',
        help="enable INFO logging level",
    )
    parser.add_argument(
        '-v',
        '--version',
        action='store_true',
        help="print treecount version and exit",
    )
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')

    family = sub.add_parser('family', help="count a family graph")
    family.add_argument('family', choices=list(FAMILIES))
    family.add_argument('-m', type=int, help="m (q side or cone multiplicity)")
    family.add_argument('-n', type=int, help="n (p side / K_n order)")
    family.add_argument('-k', type=int, help="k (multiplicity)")
    family.add_argument(
        '--ks', type=_int_list, metavar="K1,K2,...", help="k_1..k_m"
    )
    family.add_argument(
        '--parts', type=_int_list, metavar="N1,N2,...", help="part sizes"
    )
    _add_method_options(family, 'formula')

    count = sub.add_parser('count', help="count a graph read from a file")
    count.add_argument('path', help="edge-list file")
    _add_method_options(count, 'matrix-tree')

    verify = sub.add_parser(
        'verify', help="check every formula against every counter"
    )
    verify.add_argument(
        '--families',
        type=_family_list,
        default=None,
        metavar="NAME,...",
        help="families to verify (default all)",
    )
    verify.add_argument('--max-n', type=int, default=None, metavar="N")
    verify.add_argument('--max-m', type=int, default=None, metavar="M")
    verify.add_argument('--max-k', type=int, default=None, metavar="K")
    verify.add_argument(
        '--workers',
        type=int,
        default=1,
        metavar="N",
        help="worker processes (default 1)",
    )
    verify.add_argument(
        '--threads',
        action='store_true',
        help="run the --workers in threads instead of processes",
    )
    verify.add_argument(
        '--no-brute-force',
        action='store_true',
        help="skip the brute force oracle",
    )
    verify.add_argument(
        '--brute-budget', type=int, default=None, metavar="N"
    )

    export = sub.add_parser('export', help="write a graph file")
    export.add_argument(
        'source', help="edge-list file or family spec (e.g. cone:m=3:n=3)"
    )
    export.add_argument('--format', choices=FORMATS, default='edge-list')
    export.add_argument('-o', '--output', default=None, metavar="PATH")
    return parser


_COMMANDS = {
    'family': cmd_family,
    'count': cmd_count,
    'verify': cmd_verify,
    'export': cmd_export,
}


def main(args=None):
    """Exact spanning tree counting for multigraphs."""
    parser = build_parser()
    options = parser.parse_args(args=args)
    if options.version:
        sys.exit(f"treecount {__ver__}")
    if options.command is None:
        parser.error("a command is required")

    if options.debug:
        config_logging(level=logging.DEBUG)
    elif options.verbose:
        config_logging(level=logging.INFO)
    else:
        config_logging()

    try:
        return _COMMANDS[options.command](options, parser)
    except ResourceBudgetExceeded as err:
        parser.exit(EXIT_BUDGET, f"{parser.prog}: {err}\n")


if __name__ == '__main__':
    sys.exit(main())
