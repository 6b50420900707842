"""
q-independence, closeness, boundedness and the conflict graphs B_q(L), D_q(L).

Two links v, w are
  q-independent               if d_vw * d_wv > q^2 l_v l_w,
  q-independent (mean power)  if d_vw > q sqrt(l_v l_w) and d_wv > q sqrt(l_v l_w).
Under the mean power assignment the second form is the same as both pairwise
affectances being below 1/q^alpha.
"""
import enum
import itertools
import logging
import math
import networkx as nx
import numpy as np
from .geometry import ModelKind
from .interference import PowerAssignment, affectance, affectance_matrix

logger = logging.getLogger(__name__)


class Criterion(enum.Enum):
    GENERAL = 'general'
    MEAN_POWER = 'mean'


def criterion_for(model):
    """
    Criterion used for a model by the scheduling pipeline: the general one for
    bidirectional instances (graph B_q), the mean-power one for directed
    instances (graph D_q).
    """
    if ModelKind(model) is ModelKind.BIDIRECTIONAL:
        return Criterion.GENERAL
    return Criterion.MEAN_POWER


def q_independent_pair(inst, v, w, q):
    i, j = inst.index(v), inst.index(w)
    d = inst.asym
    l = inst.lengths
    return d[i, j] * d[j, i] > q * q * (l[i] * l[j])


def q_independent_mean(inst, v, w, q):
    i, j = inst.index(v), inst.index(w)
    d = inst.asym
    l = inst.lengths
    bound = q * math.sqrt(l[i] * l[j])
    return d[i, j] > bound and d[j, i] > bound


def _pair_predicate(criterion):
    if Criterion(criterion) is Criterion.GENERAL:
        return q_independent_pair
    return q_independent_mean


def is_q_independent_set(inst, S, q, criterion=None):
    """
    True iff every unordered pair of S is q-independent under the criterion
    (default: criterion_for(inst.model)).
    """
    pred = _pair_predicate(criterion or criterion_for(inst.model))
    return all(pred(inst, v, w, q) for v, w in itertools.combinations(S, 2))


def tau_close(inst, v, w, tau):
    """ True iff one of the two mean-power affectances between v and w is >= tau. """
    pa = PowerAssignment.mean()
    return max(affectance(inst, pa, v, w), affectance(inst, pa, w, v)) >= tau


def closeness_matrix(inst):
    """ C[i, j] = max(a_i(j), a_j(i)) under the mean power assignment. """
    A = affectance_matrix(inst, PowerAssignment.mean())
    return np.maximum(A, A.T)


def boundedness(inst, S, n=None, closeness=None):
    """
    The smallest p for which S is p-bounded: the largest number, over links v
    of the whole instance, of links w in S with l_w >= n^2 l_v that are
    1/(2n)-close to v.
    - n: the size of the link universe, len(inst) by default.
    - closeness: precomputed closeness_matrix(inst).
    """
    cols = inst.indices(S)
    if len(cols) == 0:
        return 0
    n = len(inst) if n is None else n
    C = closeness_matrix(inst) if closeness is None else closeness
    l = inst.lengths
    longer = l[None, cols] >= (n * n) * l[:, None]
    close = C[:, cols] >= 1.0 / (2.0 * n)
    counted = longer & close
    # a link never counts against itself
    counted[cols, np.arange(len(cols))] = False
    return int(counted.sum(axis=1).max())


def is_well_separated(inst, S, n=None):
    """ True iff every pairwise length ratio in S lies in [1, 2] or [n^2, inf). """
    n = len(inst) if n is None else n
    l = sorted(inst.lengths[inst.indices(S)])
    for a, b in itertools.combinations(l, 2):
        ratio = b / a
        if 2.0 < ratio < n * n:
            return False
    return True


class ConflictGraph(nx.Graph):
    """
    Undirected graph on link ids, joining the links that are not
    q-independent. q, the model and the criterion are kept as graph
    attributes.
    """
    @property
    def q(self):
        return self.graph.get('q')

    @property
    def model(self):
        return self.graph.get('model')

    @property
    def criterion(self):
        return self.graph.get('criterion')


def conflict_matrix(inst, q, criterion):
    """ Boolean adjacency matrix of the conflict graph, in instance order. """
    d = inst.asym
    l = inst.lengths
    if Criterion(criterion) is Criterion.GENERAL:
        adj = ~(d * d.T > q * q * np.outer(l, l))
    else:
        bound = q * np.sqrt(np.outer(l, l))
        adj = ~((d > bound) & (d.T > bound))
    np.fill_diagonal(adj, False)
    return adj


def build_conflict_graph(inst, q, criterion=None):
    """
    D_q(L) for directed instances (mean-power criterion), B_q(L) for
    bidirectional ones (general criterion). criterion overrides the choice.
    """
    criterion = Criterion(criterion or criterion_for(inst.model))
    G = ConflictGraph(q=q, model=inst.model, criterion=criterion)
    G.add_nodes_from(inst.ids)
    rows, cols = np.nonzero(np.triu(conflict_matrix(inst, q, criterion)))
    G.add_edges_from((inst.ids[i], inst.ids[j]) for i, j in zip(rows, cols))
    logger.debug("conflict graph q=%g %s: %d vertices, %d edges",
                 q, criterion.value, G.number_of_nodes(), G.number_of_edges())
    return G
