"""
Exhaustive reference solvers for small instances.

- enumerate_feasible: all SINR-feasible link subsets for fixed powers.
- optimal_schedule_fixed / optimal_schedule_pc: minimum partition of the
  links into feasible sets, by dynamic programming over subsets.
- pc_feasible: zero-noise feasibility with free powers. A set S admits powers
  meeting the threshold iff the spectral radius of its gain matrix
      M[v, w] = beta * l_v^alpha / d_wv^alpha   (v != w)
  is below one; this is the classical interference-function result and is
  what the power-control optimum is measured with.
- chromatic_exact: chromatic number by branch-and-bound.

The size caps come from settings.oracle and can be overridden for all
solvers at once with the SCHED_ORACLE_MAXN environment variable.
"""
import logging
import math
import os
import networkx as nx
import numpy as np
from ._settings import settings
from .coloring import hochbaum_color
from .errors import ConvergenceError, InstanceTooLarge, PreconditionError

logger = logging.getLogger(__name__)

MAXN_ENV = 'SCHED_ORACLE_MAXN'


def oracle_cap(name):
    """ Size cap settings.oracle.<name>, unless SCHED_ORACLE_MAXN is set. """
    env = os.environ.get(MAXN_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise PreconditionError("%s must be an integer, got %r" % (MAXN_ENV, env))
    return getattr(settings.oracle, name)


def _check_size(n, max_n, name, what='links'):
    cap = oracle_cap(name) if max_n is None else max_n
    if n > cap:
        raise InstanceTooLarge(n, cap, what)


def _progress(msg, *args):
    if settings.verbosity.oracle_verb:
        logger.info(msg, *args)
    else:
        logger.debug(msg, *args)


def _bits(mask, n):
    return [k for k in range(n) if mask >> k & 1]


def _feasible_masks(n, feasible):
    """
    Boolean table over all 2^n subsets of rows 0..n-1, feasible(rows) being
    evaluated only when every subset one smaller is feasible (the families
    here are closed under taking subsets). The empty set is marked False.
    """
    table = np.zeros(1 << n, dtype=bool)
    for mask in range(1, 1 << n):
        rows = _bits(mask, n)
        if len(rows) > 1 and not all(table[mask ^ (1 << k)] for k in rows):
            continue
        table[mask] = feasible(rows)
    return table


# fixed powers

def _received_power(inst, pa):
    """ R[w, v] = P_w / d_wv^alpha, +inf for zero distance, 0 on the diagonal. """
    powers = pa.vector(inst)
    d = inst.asym
    with np.errstate(divide='ignore'):
        R = powers[:, None] / d ** inst.alpha
    R[d == 0.0] = np.inf
    np.fill_diagonal(R, 0.0)
    return R


def _fixed_power_test(inst, pa):
    pa.check(inst)
    R = _received_power(inst, pa)
    signal = pa.vector(inst) / inst.lengths ** inst.alpha
    strict = inst.noise == 0.0 and inst.beta == 1.0

    def feasible(rows):
        interference = R[np.ix_(rows, rows)].sum(axis=0) + inst.noise
        if np.any(np.isinf(interference)):
            return False
        s = signal[rows]
        with np.errstate(divide='ignore'):
            sinr = np.where(interference > 0.0, s / interference, np.inf)
        return bool(np.all(sinr > inst.beta) if strict else np.all(sinr >= inst.beta))
    return feasible


def enumerate_feasible(inst, pa, max_n=None):
    """
    All nonempty SINR-feasible subsets of the instance under power assignment
    pa, as sorted tuples of link ids, in increasing bitmask order.
    """
    n = len(inst)
    _check_size(n, max_n, 'max_enumerate')
    table = _feasible_masks(n, _fixed_power_test(inst, pa))
    ids = inst.ids
    family = [tuple(sorted(ids[k] for k in _bits(m, n))) for m in np.flatnonzero(table)]
    _progress("%d of %d subsets feasible", len(family), (1 << n) - 1)
    return family


def is_downward_closed(family):
    """ True iff every nonempty proper subset of a member is a member. """
    members = {frozenset(s) for s in family}
    for s in members:
        for v in s:
            sub = s - {v}
            if sub and sub not in members:
                return False
    return True


def _minimum_partition(n, table):
    """
    Fewest table-feasible sets partitioning rows 0..n-1, as a list of row
    lists; None when some row is infeasible even alone.
    """
    full = (1 << n) - 1
    table = table.tolist()
    best = [n + 1] * (1 << n)
    choice = [0] * (1 << n)
    best[0] = 0
    for mask in range(1, full + 1):
        low = mask & -mask
        rest = mask ^ low
        sub = rest
        while True:
            s = sub | low
            if table[s] and best[mask ^ s] + 1 < best[mask]:
                best[mask] = best[mask ^ s] + 1
                choice[mask] = s
            if sub == 0:
                break
            sub = (sub - 1) & rest
    if best[full] > n:
        return None
    parts, mask = [], full
    while mask:
        s = choice[mask]
        parts.append(_bits(s, n))
        mask ^= s
    return parts


def _optimum(inst, table, what):
    n = len(inst)
    parts = _minimum_partition(n, table)
    if parts is None:
        alone = [inst.ids[k] for k in range(n) if not table[1 << k]]
        raise PreconditionError("links %s are infeasible even alone (%s)" % (alone, what))
    slots = sorted(sorted(inst.ids[k] for k in p) for p in parts)
    _progress("%s optimum: %d slots for %d links", what, len(slots), n)
    return slots


def optimal_partition_fixed(inst, pa, max_n=None):
    """ A minimum partition of the links into sets feasible under pa. """
    _check_size(len(inst), max_n, 'max_partition')
    table = _feasible_masks(len(inst), _fixed_power_test(inst, pa))
    return _optimum(inst, table, 'fixed power')


def optimal_schedule_fixed(inst, pa, max_n=None):
    """ Minimum number of slots with the powers of pa. """
    return len(optimal_partition_fixed(inst, pa, max_n))


# power control

def gain_matrix(inst, S=None):
    """
    Normalized gain matrix of the links S (all links by default), in the
    given order: M[v, w] = beta * (l_v / d_wv)^alpha, +inf for zero distance.
    """
    rows = np.arange(len(inst)) if S is None else inst.indices(S)
    l = inst.lengths[rows]
    d = inst.asym[np.ix_(rows, rows)]
    with np.errstate(divide='ignore'):
        M = inst.beta * (l[:, None] / d.T) ** inst.alpha
    M[d.T == 0.0] = np.inf
    np.fill_diagonal(M, 0.0)
    return M


def _component_radius(M, lower_stop, upper_stop):
    """
    Perron root of an irreducible nonnegative matrix by power iteration on
    M + I. The Collatz-Wielandt quotients min/max (Bx)_i / x_i bracket the
    root; iteration stops once the bracket is within tolerance or lies
    entirely on one side of the stop values. Returns (lower, upper).
    """
    tol = settings.numerics.power_iteration_tol
    maxiter = settings.numerics.power_iteration_maxiter
    B = M + np.eye(M.shape[0])
    x = np.ones(M.shape[0])
    lo, hi = 0.0, math.inf
    for _ in range(maxiter):
        y = B.dot(x)
        quotients = y / x
        lo, hi = quotients.min() - 1.0, quotients.max() - 1.0
        if hi < upper_stop or lo >= lower_stop or hi - lo <= tol * max(hi, 1.0):
            return lo, hi
        x = y / y.max()
    raise ConvergenceError(
        "power iteration did not converge in %d iterations (bracket [%g, %g])"
        % (maxiter, lo, hi))


def spectral_radius(M, stop=None):
    """
    Spectral radius of a nonnegative matrix, computed per strongly connected
    component of its support. With stop given the result is only accurate
    enough to decide whether it is below stop.
    """
    if np.any(np.isinf(M)):
        return math.inf
    n = M.shape[0]
    if n == 0:
        return 0.0
    G = nx.DiGraph()
    G.add_nodes_from(range(n))
    rows, cols = np.nonzero(M)
    G.add_edges_from(zip(rows, cols))
    radius = 0.0
    for comp in nx.strongly_connected_components(G):
        if len(comp) == 1:
            continue
        comp = sorted(comp)
        if stop is None:
            lo, hi = _component_radius(M[np.ix_(comp, comp)], math.inf, -math.inf)
        else:
            lo, hi = _component_radius(M[np.ix_(comp, comp)], stop, stop)
            if lo >= stop:
                return lo
        radius = max(radius, 0.5 * (lo + hi))
    return radius


def _pc_test(inst):
    M = gain_matrix(inst)

    def feasible(rows):
        if len(rows) == 1:
            return True
        sub = M[np.ix_(rows, rows)]
        # the radius lies between the smallest and the largest row (column) sum
        row_sums, col_sums = sub.sum(axis=1), sub.sum(axis=0)
        if min(row_sums.max(), col_sums.max()) < 1.0:
            return True
        if max(row_sums.min(), col_sums.min()) >= 1.0:
            return False
        return spectral_radius(sub, stop=1.0) < 1.0
    return feasible


def _require_zero_noise(inst):
    if inst.noise != 0.0:
        raise PreconditionError("power-control feasibility is only decided for zero noise")


def pc_feasible(inst, S, max_n=None):
    """
    True iff some power assignment makes S SINR-feasible at zero noise,
    i.e. the spectral radius of gain_matrix(inst, S) is below one.
    Raises ConvergenceError when power iteration cannot decide.
    """
    _require_zero_noise(inst)
    rows = list(inst.indices(S))
    if not rows:
        raise PreconditionError("feasibility of an empty slot is undefined")
    _check_size(len(rows), max_n, 'max_pc')
    return _pc_test(inst.subinstance(S))(list(range(len(rows))))


def optimal_partition_pc(inst, max_n=None):
    """ A minimum partition into sets that are feasible with power control. """
    _require_zero_noise(inst)
    _check_size(len(inst), max_n, 'max_partition')
    table = _feasible_masks(len(inst), _pc_test(inst))
    return _optimum(inst, table, 'power control')


def optimal_schedule_pc(inst, max_n=None):
    """ Minimum number of slots when powers are free (zero noise). """
    return len(optimal_partition_pc(inst, max_n))


# coloring

def _max_clique(G):
    return max((len(c) for c in nx.find_cliques(G)), default=0)


def _k_colorable(G, k):
    """ DSATUR backtracking: can G be colored with k colors? """
    nodes = sorted(G.nodes())
    adj = {v: set(G.neighbors(v)) for v in nodes}
    colors = {}

    def pick():
        def key(v):
            sat = len({colors[u] for u in adj[v] if u in colors})
            return (-sat, -len(adj[v]))
        return min((v for v in nodes if v not in colors), key=key)

    def extend(used):
        if len(colors) == len(nodes):
            return True
        v = pick()
        taken = {colors[u] for u in adj[v] if u in colors}
        # a fresh color is tried once; the others are symmetric
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            colors[v] = c
            if extend(max(used, c + 1)):
                return True
            del colors[v]
        return False

    return extend(0)


def chromatic_exact(G, max_n=None):
    """
    Chromatic number of G. The largest clique bounds it from below and the
    degeneracy coloring from above; the gap is closed by DSATUR
    backtracking.
    """
    n = G.number_of_nodes()
    _check_size(n, max_n, 'max_chromatic', what='vertices')
    if n == 0:
        return 0
    lower = _max_clique(G)
    best = hochbaum_color(G).num_colors
    while best > lower and _k_colorable(G, best - 1):
        best -= 1
    _progress("chromatic number %d (clique bound %d)", best, lower)
    return best

