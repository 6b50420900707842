"""
Command line interface.

    sinrsched gen      --n N --seed S [...] --out inst.json
    sinrsched schedule --in inst.json --out sched.json [--model-override M] [--trace trace.json]
    sinrsched refine   --in inst.json --schedule sched.json --p P --out refined.json
    sinrsched color    --in graph.txt|inst.json [--q Q] [--criterion C] [--edges-out graph.txt]
    sinrsched verify   --in inst.json --schedule sched.json [--oracle] [--out report.json]
    sinrsched oracle   --in inst.json --mode fixed|pc|chromatic [--power power.json]
    sinrsched bench    --specs specs.json [--repetitions R] [--oracle] [--jobs J] --out rows.csv

Exit status: 0 success, 1 infeasible schedule, 2 input error, 3 oracle size
cap exceeded.
"""
import argparse
import io
import json
import logging
import sys
from ._settings import settings
from ._version import __version__
from . import bench as bench_mod
from . import serialize
from .coloring import degeneracy_order, hochbaum_color
from .errors import InstanceTooLarge, SchedError
from .generator import GeneratorSpec, LengthDist, generate
from .geometry import ModelKind
from .independence import Criterion, build_conflict_graph
from .interference import PowerAssignment
from .oracle import chromatic_exact, optimal_partition_fixed, optimal_partition_pc
from .refinement import refine
from .report import verify
from .scheduler import independence_parameters, noise_lift, schedule_pc

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT = 2
EXIT_TOO_LARGE = 3


def _read_instance(path):
    return serialize.instance_from_dict(serialize.read_json(path))


def cmd_gen(args):
    if args.dist == 'fixed':
        dist = LengthDist.fixed(args.length)
    elif args.dist == 'uniform':
        dist = LengthDist.uniform(args.low, args.high)
    else:
        dist = LengthDist.exponential_ratio(args.diversity, args.length)
    spec = GeneratorSpec(n=args.n, seed=args.seed, area_side=args.side,
                         length_dist=dist, model=ModelKind(args.model),
                         alpha=args.alpha, beta=args.beta, noise=args.noise)
    serialize.write_json(args.out, serialize.instance_to_dict(generate(spec)))
    return EXIT_OK


def cmd_schedule(args):
    inst = _read_instance(args.inp)
    if args.model_override:
        inst = inst.replace(model=ModelKind(args.model_override))
    sched, traces = schedule_pc(inst.replace(noise=0.0), return_traces=True)
    if inst.noise > 0.0:
        sched = noise_lift(inst, sched)
    serialize.write_json(args.out, serialize.schedule_to_dict(sched))
    if args.trace:
        serialize.write_json(args.trace, [t.to_dict() for t in traces])
    return EXIT_OK


def cmd_refine(args):
    inst = _read_instance(args.inp)
    sched = serialize.schedule_from_dict(serialize.read_json(args.schedule))
    serialize.write_json(args.out, serialize.schedule_to_dict(refine(inst, sched, args.p)))
    return EXIT_OK


def _load_graph(args):
    if args.inp == '-':
        text = sys.stdin.read()
    else:
        with open(args.inp) as f:
            text = f.read()
    if text.lstrip().startswith('{'):
        inst = serialize.instance_from_dict(json.loads(text))
        q, criterion = independence_parameters(inst.model)
        q = q if args.q is None else args.q
        criterion = Criterion(args.criterion) if args.criterion else criterion
        return build_conflict_graph(inst, q, criterion)
    return serialize.parse_edge_list(text)


def cmd_color(args):
    G = _load_graph(args)
    if args.edges_out:
        serialize.write_text(args.edges_out, serialize.format_edge_list(G))
    _, delta = degeneracy_order(G)
    serialize.write_text(args.out, serialize.format_coloring(hochbaum_color(G), delta))
    return EXIT_OK


def cmd_verify(args):
    inst = _read_instance(args.inp)
    sched = serialize.schedule_from_dict(serialize.read_json(args.schedule))
    report = verify(inst, sched, oracle=args.oracle)
    serialize.write_json(args.out, report.to_dict())
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def cmd_oracle(args):
    inst = _read_instance(args.inp)
    result = {'mode': args.mode}
    if args.mode == 'chromatic':
        q, criterion = independence_parameters(inst.model)
        result['optimum'] = chromatic_exact(build_conflict_graph(inst, q, criterion))
    else:
        if args.mode == 'fixed':
            pa = serialize.power_from_dict(serialize.read_json(args.power)) \
                if args.power else PowerAssignment.mean()
            slots = optimal_partition_fixed(inst, pa)
            result['power'] = serialize.power_to_dict(pa)
        else:
            slots = optimal_partition_pc(inst)
        result['optimum'] = len(slots)
        result['slots'] = slots
    serialize.write_json(args.out, result)
    return EXIT_OK


def cmd_bench(args):
    specs = serialize.read_json(args.specs)
    if not isinstance(specs, list):
        raise SchedError("bench specs must be a JSON array")
    rows = bench_mod.bench([GeneratorSpec.from_dict(s) for s in specs],
                           args.repetitions, args.oracle, args.jobs)
    out = io.StringIO()
    bench_mod.write_csv(rows, out)
    serialize.write_text(args.out, out.getvalue())
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog='sinrsched',
                                     description="SINR link scheduling with mean power")
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('--log-level', default=None,
                        help="logging level (default from sinrschedrc)")
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('gen', help="generate a random instance")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--side', type=float, default=100.0)
    p.add_argument('--dist', choices=['fixed', 'uniform', 'exponential-ratio'],
                   default='fixed')
    p.add_argument('--length', type=float, default=1.0,
                   help="fixed length, or base length of exponential-ratio")
    p.add_argument('--low', type=float, default=1.0)
    p.add_argument('--high', type=float, default=1.0)
    p.add_argument('--diversity', type=float, default=1.0)
    p.add_argument('--model', choices=[m.value for m in ModelKind], default='directed')
    p.add_argument('--alpha', type=float, default=3.0)
    p.add_argument('--beta', type=float, default=1.0)
    p.add_argument('--noise', type=float, default=0.0)
    p.add_argument('--out', default='-')
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser('schedule', help="schedule all links with mean power")
    p.add_argument('--in', dest='inp', required=True)
    p.add_argument('--out', default='-')
    p.add_argument('--model-override', choices=[m.value for m in ModelKind])
    p.add_argument('--trace', help="write the per-class scheduling traces here")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser('refine', help="refine a schedule to a p-signal schedule")
    p.add_argument('--in', dest='inp', required=True)
    p.add_argument('--schedule', required=True)
    p.add_argument('--p', type=float, required=True)
    p.add_argument('--out', default='-')
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser('color', help="degeneracy coloring of a graph")
    p.add_argument('--in', dest='inp', required=True,
                   help="edge list, or instance JSON to build the conflict graph from")
    p.add_argument('--q', type=float, default=None)
    p.add_argument('--criterion', choices=[c.value for c in Criterion])
    p.add_argument('--edges-out', help="also write the graph as an edge list")
    p.add_argument('--out', default='-')
    p.set_defaults(func=cmd_color)

    p = sub.add_parser('verify', help="check a schedule and report")
    p.add_argument('--in', dest='inp', required=True)
    p.add_argument('--schedule', required=True)
    p.add_argument('--oracle', action='store_true')
    p.add_argument('--out', default='-')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('oracle', help="exact optimum of a small instance")
    p.add_argument('--in', dest='inp', required=True)
    p.add_argument('--mode', choices=['fixed', 'pc', 'chromatic'], required=True)
    p.add_argument('--power', help="power fragment JSON for --mode fixed (default mean)")
    p.add_argument('--out', default='-')
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser('bench', help="run an experiment grid to CSV")
    p.add_argument('--specs', required=True, help="JSON array of generator specs")
    p.add_argument('--repetitions', type=int, default=1)
    p.add_argument('--oracle', action='store_true')
    p.add_argument('--jobs', type=int, default=1)
    p.add_argument('--out', default='-')
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = args.log_level or settings.verbosity.log_level
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, str(level).upper(),
                                                         logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InstanceTooLarge as e:
        logger.error("%s", e)
        return EXIT_TOO_LARGE
    except (SchedError, ValueError, KeyError, TypeError, OSError) as e:
        logger.error("%s", e)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
