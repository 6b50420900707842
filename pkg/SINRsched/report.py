"""
Verification of schedules.

verify() is the only place that decides whether a schedule is feasible; it
checks every slot against the SINR condition with the instance's own noise,
independently of how the schedule was built.
"""
import dataclasses
import logging
import math
from typing import List, Optional
from .coloring import hochbaum_color
from .geometry import length_diversity
from .independence import boundedness, build_conflict_graph, closeness_matrix
from .interference import PowerKind, infeasible_links, noise_power_ok, signal_level
from .oracle import optimal_schedule_fixed, optimal_schedule_pc
from .scheduler import independence_parameters

logger = logging.getLogger(__name__)


@dataclasses.dataclass
class ScheduleReport:
    """
    - feasible: every link is scheduled once and every slot meets the SINR
      threshold with the instance's noise
    - signal_level: zero-noise signal level of the schedule
    - infeasible_links: ids of links failing the threshold in their slot
    - missing_links: ids of instance links the schedule leaves out
    - diversity: length diversity Lambda of the instance
    - class_boundedness: boundedness of each color class of the conflict graph
    - opt_fixed, opt_pc, ratio_vs_fixed_opt, ratio_vs_pc_opt: only set when
      the oracle ran
    """
    slot_count: int
    feasible: bool
    signal_level: float
    infeasible_links: List[int]
    missing_links: List[int]
    diversity: float
    class_boundedness: List[int]
    noise_power_ok: bool
    opt_fixed: Optional[int] = None
    opt_pc: Optional[int] = None
    ratio_vs_fixed_opt: Optional[float] = None
    ratio_vs_pc_opt: Optional[float] = None

    def to_dict(self):
        d = dataclasses.asdict(self)
        d['lambda'] = d.pop('diversity')
        if math.isinf(self.signal_level):
            d['signal_level'] = 'inf'
        return d


def color_classes(inst):
    """ Color classes of the conflict graph the scheduling pipeline uses. """
    q, criterion = independence_parameters(inst.model)
    return hochbaum_color(build_conflict_graph(inst, q, criterion)).classes()


def verify(inst, sched, classes=None, oracle=False, max_n=None):
    """
    Report on a schedule of inst. Raises InvalidSchedule for unknown ids,
    overlapping or empty slots and MissingPower for an incomplete explicit
    assignment.

    - classes: link sets whose boundedness is reported, by default the color
      classes of the pipeline's conflict graph
    - oracle: also compute the exact optima (fixed powers of the schedule,
      and power control when the noise is zero) and the ratios to them
    """
    sched.check(inst)
    pa = sched.power
    pa.check(inst)
    bad = sorted(i for slot in sched.slots for i in infeasible_links(inst, pa, slot))
    missing = sorted(set(inst.ids) - sched.covered)
    level = signal_level(inst, pa, sched.slots).signal_level if len(sched) else 0.0
    classes = color_classes(inst) if classes is None else classes
    close = closeness_matrix(inst)
    report = ScheduleReport(
        slot_count=len(sched),
        feasible=not bad and not missing,
        signal_level=level,
        infeasible_links=bad,
        missing_links=missing,
        diversity=length_diversity(inst),
        class_boundedness=[boundedness(inst, c, closeness=close) for c in classes],
        # the noise bound only concerns the mean assignment
        noise_power_ok=noise_power_ok(inst, pa) if pa.kind is PowerKind.MEAN else True)
    if oracle:
        report.opt_fixed = optimal_schedule_fixed(inst, pa, max_n)
        report.ratio_vs_fixed_opt = report.slot_count / report.opt_fixed
        if inst.noise == 0.0:
            report.opt_pc = optimal_schedule_pc(inst, max_n)
            report.ratio_vs_pc_opt = report.slot_count / report.opt_pc
    if bad:
        logger.info("schedule infeasible at links %s", bad)
    return report
