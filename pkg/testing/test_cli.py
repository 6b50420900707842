import csv
import io
import json
import os
import shutil
import tempfile
import networkx as nx
import unittest
from SINRsched import bench, cli, serialize
from SINRsched.coloring import hochbaum_color
from SINRsched.errors import InvalidInstance, InvalidSchedule
from SINRsched.generator import GeneratorSpec, LengthDist, generate
from SINRsched.geometry import ModelKind
from SINRsched.interference import PowerAssignment
from SINRsched.refinement import Schedule
from SINRsched.report import verify
from SINRsched.scheduler import schedule_pc
from testing.make_instances import coincident_links, random_instance, unit_links_on_line


class test_serialize(unittest.TestCase):
    def test_instance_round_trip(self):
        inst = generate(GeneratorSpec(n=20, seed=5, model=ModelKind.BIDIRECTIONAL,
                                      length_dist=LengthDist.uniform(1.0, 4.0), noise=0.2))
        text = serialize.dumps(serialize.instance_to_dict(inst))
        self.assertEqual(serialize.instance_from_dict(json.loads(text)), inst)

    def test_bad_instance(self):
        with self.assertRaises(InvalidInstance):
            serialize.instance_from_dict({'alpha': 3})
        with self.assertRaises(InvalidInstance):
            serialize.instance_from_dict({'links': [{'id': 1, 'sx': 0}]})
        with self.assertRaises(InvalidInstance):
            serialize.instance_from_dict({'alpha': 2.0, 'links': [
                {'id': 1, 'sx': 0, 'sy': 0, 'rx': 1, 'ry': 0}]})

    def test_schedule_round_trip(self):
        sched = Schedule([[3, 1], [2]], PowerAssignment.explicit({1: 1.0, 2: 2.5, 3: 4.0}))
        d = json.loads(serialize.dumps(serialize.schedule_to_dict(sched)))
        self.assertEqual(d['slots'], [[1, 3], [2]])
        self.assertEqual(serialize.schedule_from_dict(d), sched)

    def test_bad_schedule(self):
        with self.assertRaises(InvalidSchedule):
            serialize.schedule_from_dict({'power': {'kind': 'mean'}})

    def test_edge_list(self):
        G = nx.Graph()
        G.add_nodes_from([1, 2, 3, 4])
        G.add_edges_from([(2, 1), (3, 4)])
        text = serialize.format_edge_list(G)
        self.assertEqual(text, "# vertices: 1 2 3 4\n1 2\n3 4\n")
        H = serialize.parse_edge_list(text)
        self.assertEqual(sorted(H.nodes()), [1, 2, 3, 4])
        self.assertEqual(sorted(tuple(sorted(e)) for e in H.edges()), [(1, 2), (3, 4)])

    def test_edge_list_self_loop(self):
        with self.assertRaises(InvalidInstance):
            serialize.parse_edge_list("# vertices: 1 2\n1 2\n2 2\n")

    def test_coloring(self):
        text = serialize.format_coloring(hochbaum_color(nx.complete_graph(3)), 2)
        lines = text.splitlines()
        self.assertEqual(len(lines), 4)
        self.assertEqual(lines[-1], "colors=3 delta=2")


class test_verify(unittest.TestCase):
    def test_singletons(self):
        inst = random_instance(6, seed=1)
        report = verify(inst, Schedule([[i] for i in inst.ids], PowerAssignment.mean()))
        self.assertTrue(report.feasible)
        self.assertEqual(report.slot_count, 6)

    def test_coincident(self):
        inst = coincident_links(3)
        report = verify(inst, Schedule([[1, 2], [3]], PowerAssignment.mean()))
        self.assertFalse(report.feasible)
        self.assertEqual(report.infeasible_links, [1, 2])
        self.assertEqual(report.signal_level, 0.0)

    def test_missing(self):
        inst = unit_links_on_line([0, 50])
        report = verify(inst, Schedule([[1]], PowerAssignment.mean()))
        self.assertFalse(report.feasible)
        self.assertEqual(report.missing_links, [2])

    def test_unknown_id(self):
        with self.assertRaises(InvalidSchedule):
            verify(unit_links_on_line([0]), Schedule([[1, 2]], PowerAssignment.mean()))

    def test_oracle_ratios(self):
        inst = random_instance(7, seed=2, side=6.0)
        report = verify(inst, schedule_pc(inst), oracle=True)
        self.assertTrue(report.feasible)
        self.assertGreaterEqual(report.ratio_vs_fixed_opt, 1.0)
        self.assertGreaterEqual(report.ratio_vs_pc_opt, 1.0)
        self.assertLessEqual(report.opt_pc, report.opt_fixed)
        self.assertIn('lambda', report.to_dict())


class test_bench(unittest.TestCase):
    def test_empty(self):
        out = io.StringIO()
        bench.write_csv(bench.bench([]), out)
        self.assertEqual(out.getvalue(), ",".join(bench.BENCH_FIELDS) + "\n")

    def test_rows(self):
        specs = [GeneratorSpec(n=8, seed=1, area_side=6.0,
                               length_dist=LengthDist.exponential_ratio(4.0),
                               model=model) for model in ModelKind]
        rows = bench.bench(specs, repetitions=2, oracle=True)
        self.assertEqual(len(rows), 4)
        for row in rows:
            self.assertTrue(row['feasible'])
            self.assertGreaterEqual(row['ratio_fixed'], 1.0)
            self.assertGreaterEqual(row['ratio_pc'], 1.0)
        self.assertEqual([r['model'] for r in rows],
                         ['bidirectional', 'bidirectional', 'directed', 'directed'])

    def test_repeatable(self):
        spec = GeneratorSpec(n=10, seed=4)
        a, b = bench.bench([spec]), bench.bench([spec])
        for row in (a[0], b[0]):
            row.pop('wall_time')
        self.assertEqual(a, b)


class test_main(unittest.TestCase):
    def setUp(self):
        self.dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.dir)

    def path(self, name):
        return os.path.join(self.dir, name)

    def test_pipeline(self):
        inst, sched, report = self.path('inst.json'), self.path('sched.json'), \
            self.path('report.json')
        self.assertEqual(cli.main(['gen', '--n', '12', '--seed', '3', '--side', '10',
                                   '--dist', 'uniform', '--low', '1', '--high', '3',
                                   '--out', inst]), 0)
        self.assertEqual(cli.main(['schedule', '--in', inst, '--out', sched,
                                   '--trace', self.path('trace.json')]), 0)
        self.assertEqual(cli.main(['verify', '--in', inst, '--schedule', sched,
                                   '--out', report]), 0)
        with open(report) as f:
            self.assertTrue(json.load(f)['feasible'])
        with open(self.path('trace.json')) as f:
            traces = json.load(f)
        with open(sched) as f:
            self.assertEqual(sum(t['slot_count'] for t in traces), len(json.load(f)['slots']))
        refined = self.path('refined.json')
        self.assertEqual(cli.main(['refine', '--in', inst, '--schedule', sched,
                                   '--p', '4', '--out', refined]), 0)
        self.assertEqual(cli.main(['verify', '--in', inst, '--schedule', refined,
                                   '--out', report]), 0)

    def test_infeasible(self):
        inst, sched = self.path('inst.json'), self.path('sched.json')
        serialize.write_json(inst, serialize.instance_to_dict(coincident_links(2)))
        serialize.write_json(sched, serialize.schedule_to_dict(
            Schedule([[1, 2]], PowerAssignment.mean())))
        self.assertEqual(cli.main(['verify', '--in', inst, '--schedule', sched,
                                   '--out', self.path('r.json')]), 1)

    def test_input_error(self):
        bad = self.path('bad.json')
        with open(bad, 'w') as f:
            f.write('{"links": [')
        self.assertEqual(cli.main(['schedule', '--in', bad, '--out', self.path('s.json')]), 2)
        self.assertEqual(cli.main(['schedule', '--in', self.path('missing.json')]), 2)

    def test_too_large(self):
        inst = self.path('inst.json')
        serialize.write_json(inst, serialize.instance_to_dict(random_instance(14, seed=1)))
        self.assertEqual(cli.main(['oracle', '--in', inst, '--mode', 'pc',
                                   '--out', self.path('o.json')]), 3)

    def test_oracle(self):
        inst, out = self.path('inst.json'), self.path('o.json')
        serialize.write_json(inst, serialize.instance_to_dict(coincident_links(3)))
        for mode in ['fixed', 'pc', 'chromatic']:
            self.assertEqual(cli.main(['oracle', '--in', inst, '--mode', mode, '--out', out]), 0)
            with open(out) as f:
                self.assertEqual(json.load(f)['optimum'], 3)

    def test_color(self):
        edges, out = self.path('g.txt'), self.path('colors.txt')
        with open(edges, 'w') as f:
            f.write("# vertices: 1 2 3 4\n1 2\n2 3\n3 1\n")
        self.assertEqual(cli.main(['color', '--in', edges, '--out', out]), 0)
        with open(out) as f:
            lines = f.read().splitlines()
        self.assertEqual(lines[-1], "colors=3 delta=2")
        inst = self.path('inst.json')
        serialize.write_json(inst, serialize.instance_to_dict(unit_links_on_line([0, 10, 20])))
        self.assertEqual(cli.main(['color', '--in', inst, '--q', '2', '--out', out]), 0)
        with open(out) as f:
            self.assertEqual(f.read().splitlines()[-1], "colors=1 delta=0")

    def test_bench(self):
        specs, out = self.path('specs.json'), self.path('rows.csv')
        serialize.write_json(specs, [GeneratorSpec(n=6, seed=2).to_dict()])
        self.assertEqual(cli.main(['bench', '--specs', specs, '--repetitions', '2',
                                   '--out', out]), 0)
        with open(out) as f:
            rows = list(csv.DictReader(f))
        self.assertEqual(len(rows), 2)
        self.assertEqual(rows[0]['opt_fixed'], '')


if __name__ == '__main__':
    unittest.main()
