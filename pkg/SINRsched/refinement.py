"""
Schedules and signal strengthening.

refine() turns a p-signal schedule into a p'-signal one, splitting every slot
that is not yet p'-signal into at most ceil(2p'/p)^2 slots.

Each slot is decomposed in two first-fit passes, both bounding the
affectance ON the entering link from the members already in the group:
  1. links in non-increasing length order; a link joins the first group
     whose members affect it by less than 1/(2p').
  2. each group again, visiting its members in exactly the reverse of the
     order they joined it, with the same threshold.
Afterwards every member of a final group receives less than 1/(2p') from the
members that precede it in the first order and less than 1/(2p') from those
that follow it, so less than 1/p' in total. A link rejected by k groups of a
pass receives at least k/(2p') from its slot, which is at most 1/p, so each
pass opens at most ceil(2p'/p) groups.
"""
import logging
import math
from ._settings import settings
from .errors import InvalidSchedule, PreconditionError
from .interference import affectance_matrix, signal_level, slot_affectance

logger = logging.getLogger(__name__)


class Schedule(object):
    """
    Ordered partition of a subset of links into slots.
    - slots: sequence of sequences of link ids; stored as sorted tuples
    - power: the PowerAssignment the schedule was built for
    """
    def __init__(self, slots, power):
        self.slots = tuple(tuple(sorted(s)) for s in slots)
        self.power = power

    def __len__(self):
        return len(self.slots)

    def __iter__(self):
        return iter(self.slots)

    def __getitem__(self, k):
        return self.slots[k]

    def __eq__(self, other):
        return isinstance(other, Schedule) and self.slots == other.slots \
            and self.power == other.power

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "Schedule(%d slots, %d links, %r)" % (
            len(self), len(self.covered), self.power)

    @property
    def covered(self):
        return frozenset(i for s in self.slots for i in s)

    def check(self, inst):
        """ Raise InvalidSchedule on empty slots, overlaps or unknown ids. """
        seen = set()
        known = set(inst.ids)
        for k, slot in enumerate(self.slots):
            if not slot:
                raise InvalidSchedule("slot %d is empty" % k)
            for i in slot:
                if i not in known:
                    raise InvalidSchedule("slot %d refers to unknown link %r" % (k, i))
                if i in seen:
                    raise InvalidSchedule("link %r appears in more than one slot" % (i,))
                seen.add(i)
        return self


def growth_bound(p, p_target):
    """ Slot growth factor ceil(2p'/p)^2 of refine(), p capped at p'. """
    p = min(p, p_target)
    return int(math.ceil(2.0 * p_target / p)) ** 2


def _first_fit(order, A, threshold):
    """
    Assign the rows in `order` to groups; a row joins the first group whose
    summed affectance on it, A[members, row], is below threshold.
    """
    groups = []
    for k in order:
        for members in groups:
            if math.fsum(A[members, k]) < threshold:
                members.append(k)
                break
        else:
            groups.append([k])
    return groups


def _repair(inst, pa, group, p_target):
    """
    Split off links until every part is p'-signal; only reachable through
    rounding at the threshold.
    """
    parts = []
    pending = [list(group)]
    while pending:
        part = pending.pop()
        worst = max(part, key=lambda v: slot_affectance(inst, pa, part, v))
        if slot_affectance(inst, pa, part, worst) < 1.0 / p_target:
            parts.append(part)
            continue
        logger.warning("refinement moved link %r to a fresh slot", worst)
        part.remove(worst)
        pending.extend([part, [worst]])
    return parts


def refine_slot(inst, pa, slot, p_target, A=None):
    """
    Decompose one slot (link ids) into p_target-signal groups.
    A: precomputed affectance_matrix(inst, pa).
    """
    rows = list(inst.indices(slot))
    if A is None:
        A = affectance_matrix(inst, pa)
    lengths = inst.lengths
    ids = inst.ids
    threshold = 1.0 / (2.0 * p_target)
    order = sorted(rows, key=lambda k: (-lengths[k], ids[k]))
    out = []
    for group in _first_fit(order, A, threshold):
        for sub in _first_fit(group[::-1], A, threshold):
            members = [ids[k] for k in sub]
            out.extend(_repair(inst, pa, members, p_target))
    return [sorted(g) for g in out]


def refine(inst, sched, p_target):
    """
    Refine a schedule into a p_target-signal schedule over the same links.

    Slots that are already p_target-signal are kept as they are. Raises
    PreconditionError when some slot holds a pair with infinite affectance.
    """
    if not p_target > 0.0:
        raise PreconditionError("p_target must be positive, got %r" % p_target)
    sched.check(inst)
    pa = sched.power
    if not len(sched):
        return sched
    report = signal_level(inst, pa, sched.slots)
    if report.signal_level == 0.0:
        raise PreconditionError(
            "link %r has infinite affectance in its slot; no signal level is reachable"
            % (report.worst_link,))
    if report.worst_affectance < 1.0 / p_target:
        return sched
    A = affectance_matrix(inst, pa)
    out = []
    for slot in sched.slots:
        if signal_level(inst, pa, [slot]).worst_affectance < 1.0 / p_target:
            out.append(list(slot))
        else:
            out.extend(refine_slot(inst, pa, slot, p_target, A))
    refined = Schedule(out, pa)
    bound = growth_bound(report.signal_level, p_target) * len(sched)
    logger.debug("refined %d slots into %d (p=%g -> %g, bound %d)",
                 len(sched), len(refined), report.signal_level, p_target, bound)
    if settings.verbosity.schedule_verb:
        logger.info("refinement to %g-signal: %d -> %d slots", p_target,
                    len(sched), len(refined))
    return refined
