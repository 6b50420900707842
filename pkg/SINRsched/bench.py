"""
Experiment harness: generate, schedule, verify and optionally compare with
the exact optima, one CSV row per (spec, repetition).

Columns (BENCH_FIELDS):
    n, model, alpha, beta, noise, seed, lambda, slot_count, feasible,
    opt_fixed, opt_pc, ratio_fixed, ratio_pc, wall_time
opt_* and ratio_* are empty unless the oracle ran; wall_time is the
scheduling time in seconds. Repetition r uses seed spec.seed + r.
"""
import concurrent.futures
import csv
import dataclasses
import logging
import time
from .generator import generate
from .oracle import oracle_cap
from .report import verify
from .scheduler import noise_lift, schedule_pc

logger = logging.getLogger(__name__)

BENCH_FIELDS = ['n', 'model', 'alpha', 'beta', 'noise', 'seed', 'lambda',
                'slot_count', 'feasible', 'opt_fixed', 'opt_pc', 'ratio_fixed',
                'ratio_pc', 'wall_time']


def build_schedule(inst):
    """ schedule_pc for zero noise, its noise lift otherwise. """
    if inst.noise == 0.0:
        return schedule_pc(inst)
    return noise_lift(inst)


def run_cell(spec, oracle=False):
    inst = generate(spec)
    start = time.perf_counter()
    sched = build_schedule(inst)
    wall = time.perf_counter() - start
    use_oracle = oracle and spec.n <= oracle_cap('max_partition')
    report = verify(inst, sched, oracle=use_oracle)
    return {'n': spec.n, 'model': inst.model.value, 'alpha': inst.alpha,
            'beta': inst.beta, 'noise': inst.noise, 'seed': spec.seed,
            'lambda': report.diversity, 'slot_count': report.slot_count,
            'feasible': report.feasible, 'opt_fixed': report.opt_fixed,
            'opt_pc': report.opt_pc, 'ratio_fixed': report.ratio_vs_fixed_opt,
            'ratio_pc': report.ratio_vs_pc_opt, 'wall_time': wall}


def _row_key(row):
    return (row['n'], row['model'], row['alpha'], row['beta'], row['noise'],
            row['seed'])


def bench(specs, repetitions=1, oracle=False, jobs=1):
    """
    Rows for every spec and repetition, sorted by (n, model, alpha, beta,
    noise, seed). Cells run in a process pool when jobs > 1.
    """
    cells = [dataclasses.replace(spec, seed=spec.seed + r)
             for spec in specs for r in range(repetitions)]
    if jobs > 1 and len(cells) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(run_cell, cells, [oracle] * len(cells)))
    else:
        rows = [run_cell(c, oracle) for c in cells]
    for row in rows:
        if not row['feasible']:
            logger.warning("infeasible schedule for n=%d seed=%d", row['n'], row['seed'])
    return sorted(rows, key=_row_key)


def write_csv(rows, stream):
    writer = csv.DictWriter(stream, fieldnames=BENCH_FIELDS, lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow({k: '' if row[k] is None else row[k] for k in BENCH_FIELDS})
