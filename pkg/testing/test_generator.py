import numpy as np
import unittest
from SINRsched import serialize
from SINRsched.errors import PreconditionError
from SINRsched.generator import GeneratorSpec, LengthDist, generate
from SINRsched.geometry import ModelKind, length_diversity


class test_generate(unittest.TestCase):
    def test_single_unit_link(self):
        inst = generate(GeneratorSpec(n=1, seed=0, length_dist=LengthDist.fixed(1.0)))
        self.assertEqual(len(inst), 1)
        self.assertEqual(inst.ids, (1,))
        self.assertTrue(np.allclose(inst.lengths, 1.0))

    def test_deterministic(self):
        spec = GeneratorSpec(n=30, seed=12345, length_dist=LengthDist.uniform(1.0, 5.0),
                             model=ModelKind.BIDIRECTIONAL)
        a = serialize.dumps(serialize.instance_to_dict(generate(spec)))
        b = serialize.dumps(serialize.instance_to_dict(generate(spec)))
        self.assertEqual(a, b)
        other = serialize.dumps(serialize.instance_to_dict(
            generate(GeneratorSpec(n=30, seed=12346, length_dist=spec.length_dist))))
        self.assertNotEqual(a, other)

    def test_senders_in_square(self):
        inst = generate(GeneratorSpec(n=200, seed=1, area_side=10.0))
        s = inst.senders
        self.assertTrue(np.all((s >= 0.0) & (s <= 10.0)))

    def test_uniform_lengths(self):
        inst = generate(GeneratorSpec(n=200, seed=2, length_dist=LengthDist.uniform(2.0, 3.0)))
        self.assertTrue(np.all(inst.lengths >= 2.0 - 1e-9))
        self.assertTrue(np.all(inst.lengths <= 3.0 + 1e-9))

    def test_diversity(self):
        for target in [10.0, 100.0, 1000.0]:
            inst = generate(GeneratorSpec(n=100, seed=3, area_side=1000.0,
                                          length_dist=LengthDist.exponential_ratio(target)))
            measured = length_diversity(inst)
            self.assertTrue(target / 2.0 <= measured <= 2.0 * target)

    def test_parameters(self):
        inst = generate(GeneratorSpec(n=5, seed=4, alpha=4.0, beta=2.0, noise=0.5))
        self.assertEqual((inst.alpha, inst.beta, inst.noise), (4.0, 2.0, 0.5))

    def test_invalid(self):
        with self.assertRaises(PreconditionError):
            generate(GeneratorSpec(n=0))
        with self.assertRaises(PreconditionError):
            generate(GeneratorSpec(n=3, length_dist=LengthDist.uniform(3.0, 1.0)))
        with self.assertRaises(PreconditionError):
            generate(GeneratorSpec(n=3, length_dist=LengthDist('gamma')))

    def test_spec_dict(self):
        spec = GeneratorSpec(n=7, seed=9, length_dist=LengthDist.exponential_ratio(50.0, 2.0),
                             model=ModelKind.BIDIRECTIONAL, noise=0.1)
        self.assertEqual(GeneratorSpec.from_dict(spec.to_dict()), spec)


if __name__ == '__main__':
    unittest.main()
