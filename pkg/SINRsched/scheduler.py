"""
Scheduling with the mean power assignment.

schedule_independent() schedules a q-independent set:
  * split it into nearly equilength classes Q_i (lengths in
    [2^(i-1) l_min, 2^i l_min)),
  * gather the classes into W = 2 ceil(log2 n) well separated buckets
    B_i = Q_i + Q_(i+W) + Q_(i+2W) + ...,
  * per bucket, strengthen every class to an f-signal schedule under uniform
    power, f = 2^(alpha/2 + 1), and merge the s-th slots of all classes by
    first-fit, keeping a link k apart from any much longer link
    (l_u > n^2 l_k) that is 1/(2n)-close to it.
schedule_pc() colors the conflict graph (B_2 or D_3) and runs
schedule_independent() on every color class; noise_lift() turns a zero-noise
schedule into one that is feasible with ambient noise.
"""
import logging
import math
import numpy as np
from ._settings import settings
from .coloring import hochbaum_color
from .errors import PreconditionError
from .geometry import ModelKind
from .independence import (Criterion, build_conflict_graph, boundedness,
                           closeness_matrix, is_q_independent_set)
from .interference import PowerAssignment, PowerKind, affectance_matrix, noise_power_ok
from .refinement import Schedule, refine

logger = logging.getLogger(__name__)


class IndependentScheduleTrace(object):
    """
    Record of one schedule_independent() run.
    - n: universe size used in the n^2 and 1/(2n) thresholds
    - l_min: the shortest length in the input set
    - classes: dict i -> link ids of the equilength class Q_i
    - buckets: dict i -> class indices gathered in bucket B_i
    - class_slots: dict class index -> slots of its f-signal schedule
    - rounds: list of (bucket, round, opened slots)
    - guard_rejections: placements refused only because the slot would have
      lost SINR feasibility
    - boundedness: measured boundedness of the input set
    - slot_count: slots of the output schedule
    """
    def __init__(self, n, q, l_min):
        self.n = n
        self.q = q
        self.l_min = l_min
        self.classes = {}
        self.buckets = {}
        self.class_slots = {}
        self.rounds = []
        self.guard_rejections = 0
        self.boundedness = 0
        self.slot_count = 0

    @property
    def nonempty_buckets(self):
        return sum(1 for b in self.buckets.values() if b)

    @property
    def max_class_slots(self):
        return max(self.class_slots.values()) if self.class_slots else 0

    @property
    def budget(self):
        """ (boundedness + 1) x nonempty buckets x max per-class refinement slots """
        return (self.boundedness + 1) * self.nonempty_buckets * self.max_class_slots

    @property
    def max_opened_per_round(self):
        return max((opened for _, _, opened in self.rounds), default=0)

    def to_dict(self):
        return {'n': self.n,
                'q': self.q,
                'l_min': self.l_min,
                'classes': {str(i): list(c) for i, c in sorted(self.classes.items())},
                'buckets': {str(i): list(b) for i, b in sorted(self.buckets.items())},
                'class_slots': {str(i): k for i, k in sorted(self.class_slots.items())},
                'rounds': [{'bucket': b, 'round': s, 'opened': o}
                           for b, s, o in self.rounds],
                'guard_rejections': self.guard_rejections,
                'boundedness': self.boundedness,
                'nonempty_buckets': self.nonempty_buckets,
                'max_class_slots': self.max_class_slots,
                'budget': self.budget,
                'slot_count': self.slot_count}


def bucket_count(n):
    """ W = 2 ceil(log2 n), and 2 for a single link. """
    if n <= 1:
        return 2
    return 2 * int(math.ceil(math.log2(n)))


def _class_index(length, l_min):
    i = int(math.floor(math.log2(length / l_min))) + 1
    # log2 may round across a power of two
    while length >= 2.0 ** i * l_min:
        i += 1
    while i > 1 and length < 2.0 ** (i - 1) * l_min:
        i -= 1
    return i


def partition_equilength(inst, Q):
    """
    Map i -> ids of the links of Q with length in [2^(i-1) l_min, 2^i l_min).
    """
    ids = sorted(inst.link(v).id for v in Q)
    if not ids:
        raise PreconditionError("cannot partition an empty link set")
    lengths = inst.lengths
    l_min = min(lengths[inst.index(i)] for i in ids)
    classes = {}
    for i in ids:
        classes.setdefault(_class_index(lengths[inst.index(i)], l_min), []).append(i)
    return classes


def bucketize(classes, n):
    """
    Map i -> sorted class indices c with c = i (mod W), for i = 1..W.
    Empty buckets are kept.
    """
    if n < 1:
        raise PreconditionError("n must be at least 1")
    W = bucket_count(n)
    buckets = {i: [] for i in range(1, W + 1)}
    for c in sorted(classes):
        buckets[(c - 1) % W + 1].append(c)
    return buckets


class _Slot(object):
    """ A slot being filled by first-fit, with the running mean-power affectance of each member. """
    def __init__(self):
        self.rows = []
        self.incoming = []


def _merge_round(rows, lengths, ids, n, close, A, trace):
    """
    First-fit of one round's links into slots opened on demand. A link k
    does not join a slot holding a link u with l_u > n^2 l_k that is
    1/(2n)-close to k, nor one whose SINR feasibility it would break.
    """
    order = sorted(rows, key=lambda k: (-lengths[k], ids[k]))
    tau = 1.0 / (2.0 * n)
    limit = 1.0 - settings.numerics.rel_tol
    slots = []
    for k in order:
        placed = False
        for slot in slots:
            members = slot.rows
            if any(lengths[u] > n * n * lengths[k] and close[u, k] >= tau
                   for u in members):
                continue
            on_k = math.fsum(A[members, k])
            if on_k >= limit or any(a + A[k, u] >= limit
                                    for u, a in zip(members, slot.incoming)):
                trace.guard_rejections += 1
                continue
            slot.incoming = [a + A[k, u] for u, a in zip(members, slot.incoming)]
            slot.rows.append(k)
            slot.incoming.append(on_k)
            placed = True
            break
        if not placed:
            slot = _Slot()
            slot.rows.append(k)
            slot.incoming.append(0.0)
            slots.append(slot)
    return [[ids[k] for k in slot.rows] for slot in slots]


def schedule_independent(inst, Q, q, n=None, criterion=None, closeness=None):
    """
    Schedule a q-independent link set Q under the mean power assignment.

    - n: universe size for the thresholds, len(Q) by default
    - criterion: independence criterion checked on Q, by default the one of
      the instance's model
    - closeness: precomputed independence.closeness_matrix(inst)

    Returns (Schedule, IndependentScheduleTrace).
    """
    ids_Q = sorted(inst.link(v).id for v in Q)
    if not ids_Q:
        raise PreconditionError("cannot schedule an empty link set")
    if q < 1:
        raise PreconditionError("q must be at least 1, got %r" % q)
    if not is_q_independent_set(inst, ids_Q, q, criterion):
        raise PreconditionError("input set is not %g-independent" % q)
    rows = inst.indices(ids_Q)
    d = inst.asym[np.ix_(rows, rows)]
    if np.any(d[~np.eye(len(rows), dtype=bool)] == 0.0):
        raise PreconditionError("input set has a pair with infinite affectance")

    n = len(ids_Q) if n is None else n
    close = closeness_matrix(inst) if closeness is None else closeness
    mean = PowerAssignment.mean()
    uniform = PowerAssignment.uniform()
    A = affectance_matrix(inst, mean)
    lengths, ids = inst.lengths, inst.ids
    f = 2.0 ** (inst.alpha / 2.0 + 1.0)

    classes = partition_equilength(inst, ids_Q)
    buckets = bucketize(classes, n)
    trace = IndependentScheduleTrace(n, q, float(lengths[rows].min()))
    trace.classes = classes
    trace.buckets = buckets

    slots = []
    for b in sorted(buckets):
        if not buckets[b]:
            continue
        strengthened = []
        for c in buckets[b]:
            sigma = refine(inst, Schedule([classes[c]], uniform), f)
            trace.class_slots[c] = len(sigma)
            strengthened.append(sigma.slots)
        for s in range(max(len(sigma) for sigma in strengthened)):
            merged = [inst.index(i) for sigma in strengthened if s < len(sigma)
                      for i in sigma[s]]
            opened = _merge_round(merged, lengths, ids, n, close, A, trace)
            trace.rounds.append((b, s + 1, len(opened)))
            slots.extend(opened)
            logger.debug("bucket %d round %d: %d links into %d slots",
                         b, s + 1, len(merged), len(opened))

    trace.boundedness = boundedness(inst, ids_Q, n, close)
    trace.slot_count = len(slots)
    if trace.max_opened_per_round > trace.boundedness + 1:
        logger.warning("a merge round opened %d slots, above boundedness + 1 = %d",
                       trace.max_opened_per_round, trace.boundedness + 1)
    if settings.verbosity.schedule_verb:
        logger.info("independent set of %d links: %d classes, %d buckets, %d slots "
                    "(budget %d)", len(ids_Q), len(classes), trace.nonempty_buckets,
                    trace.slot_count, trace.budget)
    return Schedule(slots, mean), trace


def independence_parameters(model):
    """ (q, criterion) of the pipeline: (2, general) bidirectional, (3, mean) directed. """
    if ModelKind(model) is ModelKind.BIDIRECTIONAL:
        return 2.0, Criterion.GENERAL
    return 3.0, Criterion.MEAN_POWER


def schedule_pc(inst, return_traces=False):
    """
    Zero-noise schedule of all links under the mean power assignment.

    The conflict graph (B_2 for bidirectional, D_3 for directed instances) is
    colored greedily along a degeneracy order and every color class is
    scheduled by schedule_independent(). Links that would meet an infinite
    affectance inside their class get singleton slots at the end. For
    beta > 1 the result is strengthened to a beta-signal schedule.
    """
    q, criterion = independence_parameters(inst.model)
    G = build_conflict_graph(inst, q, criterion)
    coloring = hochbaum_color(G)
    close = closeness_matrix(inst)
    d = inst.asym

    slots, degenerate, traces = [], [], []
    for cls in coloring.classes():
        rows = inst.indices(cls)
        sub = d[np.ix_(rows, rows)] == 0.0
        np.fill_diagonal(sub, False)
        bad = sub.any(axis=0) | sub.any(axis=1)
        keep = [i for i, b in zip(cls, bad) if not b]
        degenerate.extend(i for i, b in zip(cls, bad) if b)
        if keep:
            sched, trace = schedule_independent(inst, keep, q, len(inst), criterion, close)
            slots.extend(sched.slots)
            traces.append(trace)
    slots.extend([i] for i in sorted(degenerate))
    schedule = Schedule(slots, PowerAssignment.mean())
    if inst.beta > 1.0:
        schedule = refine(inst, schedule, inst.beta)
    logger.info("scheduled %d links in %d slots (%d color classes)",
                len(inst), len(schedule), coloring.num_colors)
    if return_traces:
        return schedule, traces
    return schedule


def noise_scale(inst):
    """
    Smallest mean-power scale c with P_v / l_v^alpha >= 2 beta N for all links,
    c = 2 beta N max_v l_v^(alpha/2).
    """
    c = 2.0 * inst.beta * inst.noise * float(np.max(inst.lengths ** (inst.alpha / 2.0)))
    if c == 0.0:
        return 1.0
    # rounding may leave the longest link a few ulps short of the bound
    for _ in range(64):
        if noise_power_ok(inst, PowerAssignment.mean(c)):
            return c
        c = float(np.nextafter(c, np.inf))
    raise PreconditionError("no mean-power scale meets the noise bound")


def noise_lift(inst, schedule=None):
    """
    Schedule feasible under the ambient noise of inst.

    The zero-noise mean-power schedule (given, or built by schedule_pc) is
    strengthened to a 2 beta-signal schedule and the mean-power scale is
    raised to noise_scale(inst); then every link keeps SINR >= beta with
    noise. With N = 0 the zero-noise schedule is returned as is.
    """
    if schedule is None:
        schedule = schedule_pc(inst.replace(noise=0.0))
    if inst.noise == 0.0:
        return schedule
    if schedule.power.kind is not PowerKind.MEAN:
        raise PreconditionError("noise lift needs a mean-power schedule")
    strengthened = refine(inst, Schedule(schedule.slots, PowerAssignment.mean()),
                          2.0 * inst.beta)
    c = noise_scale(inst)
    logger.info("noise lift: %d -> %d slots, c=%g", len(schedule), len(strengthened), c)
    return Schedule(strengthened.slots, PowerAssignment.mean(c))
