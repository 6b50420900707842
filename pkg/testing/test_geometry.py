import numpy as np
import unittest
from SINRsched import geometry
from SINRsched.errors import InvalidInstance
from SINRsched.geometry import LinkInstance, ModelKind, Point
from testing.make_instances import example_pair, link, make_instance


class test_distance(unittest.TestCase):
    def test_points(self):
        self.assertEqual(geometry.distance(Point(0, 0), Point(0, 0)), 0.0)
        self.assertEqual(geometry.distance(Point(0, 0), Point(3, 4)), 5.0)
        self.assertEqual(geometry.distance(Point(1, 1), Point(4, 5)), 5.0)

    def test_link_length(self):
        self.assertEqual(link(1, 0, 0, 1, 0).length, 1.0)
        self.assertEqual(link(1, 0, 0, 3, 4).length, 5.0)
        self.assertEqual(link(1, 2, 2, 2, 9).length, 7.0)

    def test_symmetric(self):
        rng = np.random.RandomState(0)
        for _ in range(100):
            a, b = Point(*rng.randn(2)), Point(*rng.randn(2))
            self.assertEqual(geometry.distance(a, b), geometry.distance(b, a))

    def test_triangle(self):
        rng = np.random.RandomState(2)
        for _ in range(1000):
            a, b, c = (Point(*rng.uniform(-100, 100, 2)) for _ in range(3))
            ab, bc, ac = geometry.distance(a, b), geometry.distance(b, c), \
                geometry.distance(a, c)
            self.assertLessEqual(ac, (ab + bc) * (1.0 + 1e-12))


class test_asym(unittest.TestCase):
    def test_directed(self):
        inst = example_pair()
        self.assertEqual(geometry.asym_distance(inst, 1, 2), 11.0)
        self.assertEqual(geometry.asym_distance(inst, 2, 1), 9.0)
        self.assertEqual(inst.asym[0, 1], 11.0)
        self.assertEqual(inst.asym[1, 0], 9.0)

    def test_bidirectional(self):
        inst = example_pair(ModelKind.BIDIRECTIONAL)
        self.assertEqual(geometry.asym_distance(inst, 1, 2), 9.0)
        self.assertEqual(geometry.asym_distance(inst, 2, 1), 9.0)
        self.assertTrue(np.allclose(inst.asym, inst.asym.T))

    def test_self_distance(self):
        rng = np.random.RandomState(3)
        for _ in range(100):
            inst = make_instance([tuple(rng.uniform(0, 10, 4)) for _ in range(4)])
            for v in inst:
                self.assertEqual(geometry.asym_distance(inst, v.id, v.id), v.length)

    def test_bidirectional_symmetry(self):
        rng = np.random.RandomState(4)
        for _ in range(200):
            inst = make_instance([tuple(rng.uniform(0, 10, 4)) for _ in range(5)],
                                 ModelKind.BIDIRECTIONAL)
            for v in inst.ids:
                for w in inst.ids:
                    self.assertEqual(geometry.asym_distance(inst, v, w),
                                     geometry.asym_distance(inst, w, v))
            self.assertTrue(np.allclose(inst.asym, inst.asym.T, rtol=1e-12, atol=0.0))

    def test_matrix_matches_scalar(self):
        rng = np.random.RandomState(1)
        for model in ModelKind:
            inst = make_instance([tuple(rng.uniform(0, 10, 4)) for _ in range(6)], model)
            for v in inst.ids:
                for w in inst.ids:
                    self.assertTrue(np.isclose(inst.asym[inst.index(v), inst.index(w)],
                                               geometry.asym_distance(inst, v, w),
                                               rtol=1e-12, atol=0.0))
            self.assertTrue(np.allclose(inst.lengths, [v.length for v in inst]))

    def test_read_only(self):
        inst = example_pair()
        with self.assertRaises(ValueError):
            inst.asym[0, 1] = 0.0


class test_diversity(unittest.TestCase):
    def test(self):
        self.assertEqual(geometry.length_diversity(example_pair()), 1.0)
        inst = make_instance([(0, 0, 1, 0), (0, 5, 8, 5)])
        self.assertEqual(geometry.length_diversity(inst), 8.0)
        inst = make_instance([(0, 0, 2, 0), (0, 5, 3, 5), (0, 9, 12, 9)])
        self.assertEqual(geometry.length_diversity(inst), 6.0)


class test_validate(unittest.TestCase):
    def test_ok(self):
        inst = make_instance([(0, 0, 1, 0), (5, 0, 6, 0), (0, 5, 0, 7)])
        self.assertEqual(geometry.validate(inst), [])

    def test_zero_length(self):
        inst = LinkInstance([link(1, 0, 0, 0, 0)], check=False)
        self.assertTrue(any("link length must be positive" in v
                            for v in geometry.validate(inst)))
        with self.assertRaises(InvalidInstance):
            LinkInstance([link(1, 0, 0, 0, 0)])

    def test_alpha(self):
        with self.assertRaises(InvalidInstance) as cm:
            LinkInstance([link(1, 0, 0, 1, 0)], alpha=2.0)
        self.assertIn("alpha must exceed 2", cm.exception.violations)

    def test_collects_all(self):
        inst = LinkInstance([link(1, 0, 0, 1, 0), link(1, 0, 0, 0, 0)],
                            alpha=1.5, beta=0.5, noise=-1.0, check=False)
        violations = geometry.validate(inst)
        self.assertEqual(len(violations), 5)

    def test_empty(self):
        with self.assertRaises(InvalidInstance):
            LinkInstance([])


class test_instance(unittest.TestCase):
    def test_subinstance_and_scale(self):
        inst = make_instance([(0, 0, 1, 0), (5, 0, 6, 0), (0, 5, 0, 7)])
        sub = inst.subinstance([3, 1])
        self.assertEqual(sub.ids, (3, 1))
        scaled = inst.scaled(2.0)
        self.assertTrue(np.allclose(scaled.lengths, 2.0 * inst.lengths))
        self.assertTrue(np.allclose(scaled.asym, 2.0 * inst.asym))

    def test_unknown_id(self):
        with self.assertRaises(KeyError):
            example_pair().index(7)


if __name__ == '__main__':
    unittest.main()
