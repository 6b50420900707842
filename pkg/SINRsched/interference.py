"""
Power assignments, affectance and SINR feasibility.

The affectance of link v caused by w is
    a_w(v) = (P_w / P_v) * (l_v / d_wv)^alpha
i.e. the inverse SINR contribution of w on v. A set is a p-signal set when
every member's total in-set affectance is below 1/p; 1-signal sets are the
zero-noise SINR-feasible sets.
"""
import collections
import enum
import logging
import math
import numpy as np
from .errors import InvalidPowerAssignment, MissingPower, PreconditionError
from .geometry import asym_distance, link_length

logger = logging.getLogger(__name__)


class PowerKind(enum.Enum):
    UNIFORM = 'uniform'
    MEAN = 'mean'
    LINEAR = 'linear'
    EXPLICIT = 'explicit'


class PowerAssignment(object):
    """
    Rule mapping each link to a transmit power.
        Uniform  P_v = c
        Mean     P_v = c * l_v^(alpha/2)
        Linear   P_v = c * l_v^alpha
        Explicit P_v = powers[v.id]
    """
    def __init__(self, kind=PowerKind.MEAN, c=1.0, powers=None):
        self.kind = PowerKind(kind)
        self.c = float(c)
        if not (self.c > 0.0 and math.isfinite(self.c)):
            raise InvalidPowerAssignment("power scale c must be positive, got %r" % c)
        if self.kind is PowerKind.EXPLICIT:
            if powers is None:
                raise InvalidPowerAssignment("explicit assignment needs powers")
            self.powers = {k: float(p) for k, p in powers.items()}
            bad = [k for k, p in self.powers.items() if not (p > 0.0 and math.isfinite(p))]
            if bad:
                raise InvalidPowerAssignment(
                    "explicit powers must be positive (links %s)" % sorted(bad))
        else:
            self.powers = None

    @classmethod
    def uniform(cls, c=1.0):
        return cls(PowerKind.UNIFORM, c)

    @classmethod
    def mean(cls, c=1.0):
        return cls(PowerKind.MEAN, c)

    @classmethod
    def linear(cls, c=1.0):
        return cls(PowerKind.LINEAR, c)

    @classmethod
    def explicit(cls, powers):
        return cls(PowerKind.EXPLICIT, 1.0, powers)

    def scaled(self, s):
        """ The same rule with every power multiplied by s. """
        if self.kind is PowerKind.EXPLICIT:
            return PowerAssignment.explicit({k: p * s for k, p in self.powers.items()})
        return PowerAssignment(self.kind, self.c * s)

    def vector(self, inst):
        """ Powers of all links of inst, in instance order. """
        lengths = inst.lengths
        if self.kind is PowerKind.UNIFORM:
            return np.full(len(inst), self.c)
        if self.kind is PowerKind.MEAN:
            return self.c * lengths ** (inst.alpha / 2.0)
        if self.kind is PowerKind.LINEAR:
            return self.c * lengths ** inst.alpha
        return np.array([power_of(self, v, inst.alpha) for v in inst.links])

    def check(self, inst):
        """ Raise MissingPower unless every link of inst has a power. """
        if self.kind is PowerKind.EXPLICIT:
            missing = [i for i in inst.ids if i not in self.powers]
            if missing:
                raise MissingPower("no explicit power for links %s" % missing)

    def __eq__(self, other):
        return isinstance(other, PowerAssignment) and self.kind == other.kind \
            and self.c == other.c and self.powers == other.powers

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        if self.kind is PowerKind.EXPLICIT:
            return "PowerAssignment(explicit, %d powers)" % len(self.powers)
        return "PowerAssignment(%s, c=%g)" % (self.kind.value, self.c)


SignalReport = collections.namedtuple(
    'SignalReport', ['worst_affectance', 'signal_level', 'worst_link'])


def power_of(pa, v, alpha):
    if pa.kind is PowerKind.UNIFORM:
        return pa.c
    if pa.kind is PowerKind.MEAN:
        return pa.c * link_length(v) ** (alpha / 2.0)
    if pa.kind is PowerKind.LINEAR:
        return pa.c * link_length(v) ** alpha
    try:
        return pa.powers[v.id]
    except KeyError:
        raise MissingPower("no explicit power for link %r" % (v.id,))


def affectance(inst, pa, w, v):
    """
    Affectance a_w(v) of link v caused by link w. +inf when d_wv = 0.
    """
    w, v = inst.link(w), inst.link(v)
    if w.id == v.id:
        raise PreconditionError("affectance of a link on itself is undefined")
    d = asym_distance(inst, w, v)
    if d == 0.0:
        return math.inf
    ratio = power_of(pa, w, inst.alpha) / power_of(pa, v, inst.alpha)
    return ratio * (link_length(v) / d) ** inst.alpha


def affectance_matrix(inst, pa):
    """
    A[w, v] = a_w(v) for every ordered pair of instance rows, 0 on the
    diagonal and +inf for zero distances.
    """
    powers = pa.vector(inst)
    lengths = inst.lengths
    d = inst.asym
    with np.errstate(divide='ignore', invalid='ignore'):
        A = (powers[:, None] / powers[None, :]) * (lengths[None, :] / d) ** inst.alpha
    A[d == 0.0] = np.inf
    np.fill_diagonal(A, 0.0)
    return A


def slot_affectance(inst, pa, S, v):
    """ a_S(v), the summed affectance on v from every w in S other than v. """
    v = inst.link(v)
    terms = [affectance(inst, pa, w, v) for w in S if inst.link(w).id != v.id]
    if any(math.isinf(t) for t in terms):
        return math.inf
    return math.fsum(terms)


def _meets_threshold(signal, interference, beta, strict):
    if interference == 0.0:
        return True
    if math.isinf(interference):
        return False
    sinr = signal / interference
    return sinr > beta if strict else sinr >= beta


def infeasible_links(inst, pa, S):
    """
    Ids of the links v of S violating
        (P_v / l_v^alpha) / (sum_{w in S \\ v} P_w / d_wv^alpha + N) >= beta
    The comparison is strict for N = 0 and beta = 1.
    """
    S = [inst.link(v) for v in S]
    if not S:
        raise PreconditionError("feasibility of an empty slot is undefined")
    strict = inst.noise == 0.0 and inst.beta == 1.0
    alpha = inst.alpha
    failed = []
    for v in S:
        signal = power_of(pa, v, alpha) / link_length(v) ** alpha
        received = []
        for w in S:
            if w.id == v.id:
                continue
            d = asym_distance(inst, w, v)
            received.append(math.inf if d == 0.0 else power_of(pa, w, alpha) / d ** alpha)
        interference = math.fsum(received) + inst.noise \
            if not any(math.isinf(r) for r in received) else math.inf
        if not _meets_threshold(signal, interference, inst.beta, strict):
            failed.append(v.id)
    return failed


def is_sinr_feasible(inst, pa, S):
    """ True iff every link of S meets the SINR threshold (see infeasible_links). """
    return not infeasible_links(inst, pa, S)


def signal_level(inst, pa, slots):
    """
    Worst in-slot affectance over all slots (zero noise) and its reciprocal,
    the signal level p of the schedule.
    """
    if not slots:
        raise PreconditionError("signal level of an empty schedule is undefined")
    worst, worst_link = -1.0, None
    for S in slots:
        for v in S:
            a = slot_affectance(inst, pa, S, v)
            if a > worst:
                worst, worst_link = a, inst.link(v).id
    if worst == 0.0:
        level = math.inf
    elif math.isinf(worst):
        level = 0.0
    else:
        level = 1.0 / worst
    return SignalReport(worst, level, worst_link)


def is_p_signal(inst, pa, slots, p):
    """ True iff every link's in-slot affectance is below 1/p. """
    if not p > 0.0:
        raise PreconditionError("p must be positive, got %r" % p)
    return signal_level(inst, pa, slots).worst_affectance < 1.0 / p


def noise_power_ok(inst, pa):
    """ True iff P_v / l_v^alpha >= 2 beta N for every link. """
    bound = 2.0 * inst.beta * inst.noise
    return all(power_of(pa, v, inst.alpha) / link_length(v) ** inst.alpha >= bound
               for v in inst.links)
