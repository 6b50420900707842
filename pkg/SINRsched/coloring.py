"""
Degeneracy ordering and greedy coloring along it (Hochbaum's algorithm).

Removing a minimum-degree vertex repeatedly gives an ordering in which every
vertex has at most delta neighbours removed after it, delta being the
degeneracy. Coloring greedily in the reverse order therefore needs at most
delta + 1 colors.

Functions accept any networkx.Graph; vertices must be mutually comparable
(ties are broken by the lowest vertex).
"""
import collections
import heapq
import logging

logger = logging.getLogger(__name__)


class Coloring(object):
    """
    - colors: dict vertex -> color index (0-based, contiguous)
    - num_colors: 1 + the largest color used (0 for an empty graph)
    """
    def __init__(self, colors):
        self.colors = dict(colors)
        self.num_colors = max(self.colors.values()) + 1 if self.colors else 0

    def __getitem__(self, vertex):
        return self.colors[vertex]

    def __len__(self):
        return len(self.colors)

    def classes(self):
        """ Color classes as sorted vertex lists, ordered by color index. """
        classes = [[] for _ in range(self.num_colors)]
        for vertex, c in self.colors.items():
            classes[c].append(vertex)
        return [sorted(c) for c in classes]

    def __repr__(self):
        return "Coloring(%d vertices, %d colors)" % (len(self), self.num_colors)


def degeneracy_order(G):
    """
    Order the vertices by repeatedly removing one of minimum remaining degree
    (lowest vertex first among ties).

    Returns (ordering, delta) where delta is the largest degree a vertex had
    at its removal, i.e. the degeneracy of G.
    """
    degree = {v: G.degree(v) for v in G.nodes()}
    # bucket queue, one heap per degree, with lazy deletion
    buckets = collections.defaultdict(list)
    for v, d in degree.items():
        heapq.heappush(buckets[d], v)
    removed = set()
    ordering = []
    delta = 0
    current = 0
    while len(ordering) < len(degree):
        while not buckets[current]:
            current += 1
        v = heapq.heappop(buckets[current])
        if v in removed or degree[v] != current:
            continue
        removed.add(v)
        ordering.append(v)
        delta = max(delta, current)
        for u in G.neighbors(v):
            if u not in removed:
                degree[u] -= 1
                heapq.heappush(buckets[degree[u]], u)
        # a removal lowers degrees by at most one
        current = max(current - 1, 0)
    return ordering, delta


def hochbaum_color(G):
    """
    Proper coloring with at most degeneracy + 1 colors: the smallest color not
    used by an already colored neighbour, along the reverse degeneracy order.
    """
    ordering, delta = degeneracy_order(G)
    colors = {}
    for v in reversed(ordering):
        used = {colors[u] for u in G.neighbors(v) if u in colors}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    coloring = Coloring(colors)
    logger.debug("colored %d vertices with %d colors (delta=%d)",
                 len(coloring), coloring.num_colors, delta)
    return coloring


def is_proper(G, coloring):
    """ True iff every vertex is colored and no edge joins equal colors. """
    colors = coloring.colors if isinstance(coloring, Coloring) else coloring
    if any(v not in colors for v in G.nodes()):
        return False
    return all(colors[u] != colors[v] for u, v in G.edges())
