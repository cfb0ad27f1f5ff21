# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.

"""Reading and writing multigraphs.

Edge-list format (UTF-8 text):

    # comment
    vertices 4          <- optional, must be the first data line
    0 1 3               <- u v multiplicity
    0 1 2               <- repeated pairs accumulate (here: 5)

Without a "vertices" header the vertex count is 1 + the largest id.
Self-loop lines are ignored with a warning.
"""

import json

from .log import logger
from .multigraph import GraphError
from .multigraph import MultiGraph


__all__ = [
    'EdgeListParseError',
    'dump_dot',
    'dump_edge_list',
    'dump_json',
    'load_edge_list',
    'parse_edge_list',
]


class EdgeListParseError(GraphError, ValueError):
    """Raised on malformed edge-list input.  The offending line number
    (1-based) is available as the `lineno` attribute.
    """

    def __init__(self, msg, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            msg = f"line {lineno}: {msg}"
        GraphError.__init__(self, msg)


def _parse_int(token, lineno, what):
    # plain ASCII decimal: no sign, no underscores, no other scripts
    if not (token.isascii() and token.isdigit()):
        raise EdgeListParseError(
            f"{what} {token!r} is not a nonnegative integer", lineno
        )
    return int(token)


def parse_edge_list(text):
    """Parse edge-list text into a MultiGraph."""
    header = None
    edges = []
    max_id = -1
    seen_data = False
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == 'vertices':
            if seen_data:
                raise EdgeListParseError(
                    "'vertices' header must precede all edges", lineno
                )
            if len(fields) != 2:
                raise EdgeListParseError("expected 'vertices N'", lineno)
            header = _parse_int(fields[1], lineno, "vertex count")
            if header < 1:
                raise EdgeListParseError(
                    f"vertex count must be positive, got {header}", lineno
                )
            seen_data = True
            continue
        seen_data = True
        if len(fields) != 3:
            raise EdgeListParseError(
                f"expected 'u v mult', got {line!r}", lineno
            )
        u = _parse_int(fields[0], lineno, "vertex id")
        v = _parse_int(fields[1], lineno, "vertex id")
        m = _parse_int(fields[2], lineno, "multiplicity")
        if m < 1:
            raise EdgeListParseError(
                f"multiplicity must be positive, got {m}", lineno
            )
        if header is not None and max(u, v) >= header:
            raise EdgeListParseError(
                f"vertex {max(u, v)} out of range for 'vertices {header}'",
                lineno,
            )
        max_id = max(max_id, u, v)
        if u == v:
            logger.warning(
                "line %d: ignoring self-loop on vertex %d", lineno, u
            )
            continue
        edges.append((u, v, m))

    if header is None:
        if max_id < 0:
            raise EdgeListParseError("no vertices found")
        header = max_id + 1
    return MultiGraph.from_edges(header, edges)


def load_edge_list(path):
    with open(path, 'rb') as f:
        data = f.read()
    try:
        text = data.decode('utf8')
    except UnicodeDecodeError as err:
        lineno = data.count(b"\n", 0, err.start) + 1
        bad = bytes([data[err.start]])
        raise EdgeListParseError(f"invalid UTF-8 byte {bad!r}", lineno)
    return parse_edge_list(text)


def dump_edge_list(g):
    """Serialize g so that parse_edge_list() gives back an equal graph."""
    lines = [f"vertices {g.vertex_count}"]
    lines.extend(f"{u} {v} {m}" for u, v, m in g.edges())
    return "\n".join(lines) + "\n"


def dump_dot(g, name='G', labels=None):
    """Graphviz DOT text.  Parallel edges are written as repeated edge
    statements; labels, if given, maps vertex ids to display names.
    """
    lines = [f"graph {name} {{"]
    for v in g.vertices():
        if labels is not None:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v, m in g.edges():
        lines.extend([f"  {u} -- {v};"] * m)
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_json(g):
    doc = {
        'vertices': g.vertex_count,
        'edges': [{'u': u, 'v': v, 'mult': m} for u, v, m in g.edges()],
    }
    return json.dumps(doc, indent=2) + "\n"
