"""
--- FAMILY SPEC ---
FAMILY_SPEC: FAMILY:PARAM[,PARAM]*
FAMILY: [a-z][a-z0-9]*
PARAM: KEY=VALUE
KEY: [a-z]+
VALUE: [INTEGER | NAME]
INTEGER: -{0,1}[DIGIT]+
NAME: [A-Za-z]+

e.g. q:m=5,n=4   spiro:q=6,h=2,k=8   cactus:name=Qn,n=5   d3:n=2

--- EDGE LIST ---
HEADER: p VERTEX_COUNT EDGE_COUNT
EDGE: e U V            (1-based vertex ids)
COMMENT: c ...
Blank lines and comments may appear anywhere.

--- UNIT NAME ---
UNIT: [C | K | P][DIGIT]+     (cycle, complete graph, path)
"""
import re

from polysombor import graphs
from polysombor.families import build_spec
from polysombor.graphs import InvalidParameter


class FamilySpecError(ValueError):
    pass


class EdgeListError(ValueError):
    pass


INTEGER = re.compile(r"-?[0-9]+")
NAME = re.compile(r"[A-Za-z]+")
PARAM = re.compile(r"([a-z]+)=({integer}|{name})".format(integer=INTEGER.pattern, name=NAME.pattern))
FAMILY_SPEC = re.compile(r"^([a-z][a-z0-9]*):({param}(?:,{param})*)$".format(param=PARAM.pattern))
HEADER = re.compile(r"^p\s+([0-9]+)\s+([0-9]+)$")
EDGE = re.compile(r"^e\s+(-?[0-9]+)\s+(-?[0-9]+)$")
UNIT_NAME = re.compile(r"^([CKP])([0-9]+)$")


def parse_family_spec(text):
    text = text.strip()
    match = FAMILY_SPEC.match(text)
    if not match:
        raise FamilySpecError("Cannot parse family spec {!r}, expected e.g. spiro:q=6,h=2,k=8".format(text))
    values = {}
    for key, value in PARAM.findall(match.group(2)):
        if key in values:
            raise FamilySpecError("Parameter {} given twice in {!r}".format(key, text))
        values[key] = int(value) if INTEGER.fullmatch(value) else value
    try:
        return build_spec(match.group(1), **values)
    except InvalidParameter as e:
        raise FamilySpecError(str(e))


def read_edge_list(text):
    header = None
    edges = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.split()[0] == 'c':
            continue
        match = HEADER.match(line)
        if match:
            if header is not None:
                raise EdgeListError("Line {}: repeated header".format(number))
            header = int(match.group(1)), int(match.group(2))
            continue
        match = EDGE.match(line)
        if not match:
            raise EdgeListError("Line {}: unrecognized line {!r}".format(number, line))
        if header is None:
            raise EdgeListError("Line {}: edge before the 'p' header".format(number))
        u, v = int(match.group(1)), int(match.group(2))
        for w in (u, v):
            if not 1 <= w <= header[0]:
                raise EdgeListError("Line {}: vertex {} out of range 1..{}".format(number, w, header[0]))
        if u == v:
            raise EdgeListError("Line {}: self-loop at {}".format(number, u))
        edges.append((u - 1, v - 1))

    if header is None:
        raise EdgeListError("Missing 'p <vertex_count> <edge_count>' header")
    if len(edges) != header[1]:
        raise EdgeListError("Header promises {} edges, found {}".format(header[1], len(edges)))
    try:
        return graphs.Graph(header[0], edges)
    except InvalidParameter as e:
        raise EdgeListError(str(e))


def write_edge_list(g, comment=None):
    lines = []
    if comment:
        lines.append("c {}".format(comment))
    lines.append("p {} {}".format(g.vertex_count, g.edge_count))
    lines.extend("e {} {}".format(u + 1, v + 1) for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_unit_name(name):
    """Graph for a primitive unit name: C5 is a 5-cycle, K3 a triangle, P4 a path on 4 vertices."""
    match = UNIT_NAME.match(name)
    if not match:
        raise InvalidParameter("Unknown unit {!r}, expected C<q>, K<n> or P<n>".format(name))
    kind, size = match.group(1), int(match.group(2))
    if kind == 'C':
        return graphs.cycle_graph(size)
    if kind == 'K':
        return graphs.complete_graph(size)
    return graphs.path_graph(size)
