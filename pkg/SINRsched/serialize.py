"""
Text formats shared by the command line tools.

Instance JSON:
    {"alpha": 3.0, "beta": 1.0, "noise": 0.0, "model": "directed",
     "links": [{"id": 1, "sx": 0.0, "sy": 0.0, "rx": 1.0, "ry": 0.0}, ...]}
Power fragment:
    {"kind": "uniform"|"mean"|"linear"|"explicit", "c": 1.0, "powers": {"1": 2.0}}
Schedule JSON:
    {"power": <power fragment>, "slots": [[1, 3], [2]]}
Edge list:
    # vertices: 1 2 3
    1 2
Coloring output: one "id color" line per vertex, then "colors=<k> delta=<d>".

JSON is written with sorted keys so equal objects give identical bytes.
"""
import json
import sys
import networkx as nx
from .errors import InvalidInstance, InvalidPowerAssignment, InvalidSchedule
from .geometry import Link, LinkInstance, ModelKind, Point
from .interference import PowerAssignment, PowerKind
from .refinement import Schedule

VERTEX_HEADER = '# vertices:'


def _require(d, keys, error, what):
    if not isinstance(d, dict):
        raise error("%s must be a JSON object" % what)
    missing = [k for k in keys if k not in d]
    if missing:
        raise error("%s is missing %s" % (what, ", ".join(missing)))


def instance_to_dict(inst):
    return {'alpha': inst.alpha, 'beta': inst.beta, 'noise': inst.noise,
            'model': inst.model.value,
            'links': [{'id': v.id, 'sx': v.sender.x, 'sy': v.sender.y,
                       'rx': v.receiver.x, 'ry': v.receiver.y} for v in inst.links]}


def instance_from_dict(d):
    if not isinstance(d, dict) or 'links' not in d:
        raise InvalidInstance(["instance JSON needs a 'links' array"])
    links = []
    for k, e in enumerate(d['links']):
        try:
            links.append(Link(int(e['id']), Point(float(e['sx']), float(e['sy'])),
                              Point(float(e['rx']), float(e['ry']))))
        except (KeyError, TypeError, ValueError) as err:
            raise InvalidInstance(["link entry %d is malformed (%s)" % (k, err)])
    try:
        model = ModelKind(d.get('model', 'directed'))
    except ValueError:
        raise InvalidInstance(["unknown model %r" % (d.get('model'),)])
    return LinkInstance(links, model, float(d.get('alpha', 3.0)),
                        float(d.get('beta', 1.0)), float(d.get('noise', 0.0)))


def power_to_dict(pa):
    d = {'kind': pa.kind.value, 'c': pa.c}
    if pa.kind is PowerKind.EXPLICIT:
        d['powers'] = {str(k): p for k, p in sorted(pa.powers.items())}
    return d


def power_from_dict(d):
    _require(d, ['kind'], InvalidPowerAssignment, "power assignment")
    try:
        kind = PowerKind(d['kind'])
    except ValueError:
        raise InvalidPowerAssignment("unknown power kind %r" % (d['kind'],))
    if kind is PowerKind.EXPLICIT:
        _require(d, ['powers'], InvalidPowerAssignment, "explicit power assignment")
        return PowerAssignment.explicit({int(k): p for k, p in d['powers'].items()})
    return PowerAssignment(kind, d.get('c', 1.0))


def schedule_to_dict(sched):
    return {'power': power_to_dict(sched.power), 'slots': [list(s) for s in sched.slots]}


def schedule_from_dict(d):
    _require(d, ['slots'], InvalidSchedule, "schedule")
    power = power_from_dict(d['power']) if 'power' in d else PowerAssignment.mean()
    try:
        slots = [[int(i) for i in s] for s in d['slots']]
    except (TypeError, ValueError):
        raise InvalidSchedule("slots must be arrays of link ids")
    return Schedule(slots, power)


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=1) + '\n'


def read_json(path):
    """ Parse a JSON file, '-' reading standard input. """
    if path == '-':
        return json.load(sys.stdin)
    with open(path) as f:
        return json.load(f)


def write_text(path, text):
    """ Write text to a file, '-' or None writing to standard output. """
    if path in (None, '-'):
        sys.stdout.write(text)
        return
    with open(path, 'w') as f:
        f.write(text)


def write_json(path, obj):
    write_text(path, dumps(obj))


def edge_list_lines(G):
    yield "%s %s" % (VERTEX_HEADER, " ".join(str(v) for v in sorted(G.nodes())))
    for u, v in sorted(tuple(sorted(e)) for e in G.edges()):
        yield "%s %s" % (u, v)


def format_edge_list(G):
    return "\n".join(edge_list_lines(G)) + "\n"


def parse_edge_list(text):
    """
    Graph from the edge-list format. Vertices are integers; vertices only
    named in the header are kept as isolated vertices.
    """
    G = nx.Graph()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line.startswith(VERTEX_HEADER):
            G.add_nodes_from(int(v) for v in line[len(VERTEX_HEADER):].split())
            continue
        if not line or line.startswith('#'):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidInstance(["edge list line %d must hold two ids" % lineno])
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise InvalidInstance(["edge list line %d is a self-loop on %d" % (lineno, u)])
        G.add_edge(u, v)
    return G


def format_coloring(coloring, delta):
    lines = ["%s %d" % (v, c) for v, c in sorted(coloring.colors.items())]
    lines.append("colors=%d delta=%d" % (coloring.num_colors, delta))
    return "\n".join(lines) + "\n"
