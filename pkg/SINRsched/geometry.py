"""
Points, links and link instances in the Euclidean plane.

All distances go through the same formula sqrt(dx*dx + dy*dy), both for single
pairs and for the pairwise matrices (scipy.spatial.distance.cdist), so that
scalar and vectorized computations agree.
"""
import collections
import enum
import math
import numpy as np
from scipy.spatial.distance import cdist
from .errors import InvalidInstance


class Point(collections.namedtuple('Point', ['x', 'y'])):
    __slots__ = ()


class Link(collections.namedtuple('Link', ['id', 'sender', 'receiver'])):
    """
    A communication request from sender s_v to receiver r_v.
    - id: integer link id, preserved through all pipelines.
    - sender, receiver: Point
    """
    __slots__ = ()

    @property
    def length(self):
        return link_length(self)


class ModelKind(enum.Enum):
    DIRECTED = 'directed'
    BIDIRECTIONAL = 'bidirectional'


class LinkInstance(object):
    """
    The link set L together with the model and the physical parameters.

    - links: sequence of Link
    - model: ModelKind
    - alpha: path-loss exponent, alpha > 2
    - beta: SINR threshold, beta >= 1
    - noise: ambient noise N >= 0
    - check: raise InvalidInstance when the invariants do not hold. Set False
      to build an instance only for validate().

    Pairwise distances are computed once and stored as read-only arrays;
    links[i] corresponds to row/column i of every matrix.
    """
    def __init__(self, links, model=ModelKind.DIRECTED, alpha=3.0, beta=1.0,
                 noise=0.0, check=True):
        self.links = tuple(links)
        self.model = ModelKind(model)
        self.alpha = float(alpha)
        self.beta = float(beta)
        self.noise = float(noise)
        if check:
            violations = validate(self)
            if violations:
                raise InvalidInstance(violations)
        self.ids = tuple(v.id for v in self.links)
        self._index = {i: k for k, i in enumerate(self.ids)}
        self._lengths = None
        self._asym = None

    def __len__(self):
        return len(self.links)

    def __iter__(self):
        return iter(self.links)

    def __eq__(self, other):
        return isinstance(other, LinkInstance) and \
            self.links == other.links and self.model == other.model and \
            (self.alpha, self.beta, self.noise) == \
            (other.alpha, other.beta, other.noise)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "LinkInstance(n=%d, model=%s, alpha=%g, beta=%g, noise=%g)" % (
            len(self), self.model.value, self.alpha, self.beta, self.noise)

    def index(self, v):
        """ Row index of a link, given the Link or its id. """
        key = v.id if isinstance(v, Link) else v
        try:
            return self._index[key]
        except KeyError:
            raise KeyError("link %r is not in the instance" % (key,))

    def indices(self, links):
        return np.array([self.index(v) for v in links], dtype=int)

    def link(self, v):
        return self.links[self.index(v)]

    @property
    def senders(self):
        return np.array([[v.sender.x, v.sender.y] for v in self.links], dtype=float)

    @property
    def receivers(self):
        return np.array([[v.receiver.x, v.receiver.y] for v in self.links],
                        dtype=float)

    @property
    def lengths(self):
        """ l_v for every link, as a read-only array. """
        if self._lengths is None:
            self._lengths = np.diagonal(cdist(self.senders, self.receivers)).copy()
            self._lengths.setflags(write=False)
        return self._lengths

    @property
    def asym(self):
        """
        Matrix of asymmetric distances, asym[i, j] = d_{ij}, the distance
        from link i to link j in the instance's model.
        """
        if self._asym is None:
            s, r = self.senders, self.receivers
            d = cdist(s, r)
            if self.model is ModelKind.BIDIRECTIONAL:
                d = np.minimum.reduce([d, cdist(s, s), cdist(r, r), cdist(r, s)])
            d.setflags(write=False)
            self._asym = d
        return self._asym

    def replace(self, **kwargs):
        """ Copy of the instance with some of links/model/alpha/beta/noise changed. """
        args = dict(links=self.links, model=self.model, alpha=self.alpha,
                    beta=self.beta, noise=self.noise)
        args.update(kwargs)
        return LinkInstance(**args)

    def scaled(self, s):
        """ The same instance with every coordinate multiplied by s. """
        def sc(p):
            return Point(p.x * s, p.y * s)
        return self.replace(links=[Link(v.id, sc(v.sender), sc(v.receiver))
                                   for v in self.links])

    def subinstance(self, links):
        """ Instance restricted to the given links (ids or Links). """
        return self.replace(links=[self.link(v) for v in links])


def distance(a, b):
    dx = b.x - a.x
    dy = b.y - a.y
    return math.sqrt(dx * dx + dy * dy)


def link_length(v):
    return distance(v.sender, v.receiver)


def asym_distance(inst, v_from, v_to):
    """
    d_vw from link v_from to link v_to.
    Directed: d(s_from, r_to). Bidirectional: the minimum over the four
    sender/receiver pairings.
    """
    a, b = inst.link(v_from), inst.link(v_to)
    if inst.model is ModelKind.DIRECTED:
        return distance(a.sender, b.receiver)
    return min(distance(a.sender, b.receiver), distance(a.sender, b.sender),
               distance(a.receiver, b.receiver), distance(a.receiver, b.sender))


def length_diversity(inst):
    """ Lambda, the ratio of the longest to the shortest link length. """
    lengths = inst.lengths
    return float(lengths.max() / lengths.min())


def validate(inst):
    """
    Return the list of violated instance invariants; an empty list means the
    instance is well formed.
    """
    violations = []
    links = getattr(inst, 'links', ())
    if len(links) < 1:
        violations.append("instance must contain at least one link")
    seen = set()
    for v in links:
        if v.id in seen:
            violations.append("link ids must be distinct (duplicate id %r)" % (v.id,))
        seen.add(v.id)
        coords = (v.sender.x, v.sender.y, v.receiver.x, v.receiver.y)
        if not all(math.isfinite(c) for c in coords):
            violations.append("coordinates must be finite (link %r)" % (v.id,))
        elif not link_length(v) > 0.0:
            violations.append("link length must be positive (link %r)" % (v.id,))
    if not inst.alpha > 2.0:
        violations.append("alpha must exceed 2")
    if not inst.beta >= 1.0:
        violations.append("beta must be at least 1")
    if not (inst.noise >= 0.0 and math.isfinite(inst.noise)):
        violations.append("noise must be nonnegative")
    return violations
