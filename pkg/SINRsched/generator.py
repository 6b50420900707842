"""
Seeded random link instances.

Randomness comes from numpy's PCG64 bit generator seeded with GeneratorSpec.seed,
so the same GeneratorSpec gives the same instance on every platform.
Senders are uniform in [0, area_side]^2; each receiver lies at the drawn
length from its sender in a uniform random direction. Link ids are 1..n.
"""
import dataclasses
import math
import numpy as np
from .errors import PreconditionError
from .geometry import Link, LinkInstance, ModelKind, Point

FIXED = 'fixed'
UNIFORM = 'uniform'
EXPONENTIAL_RATIO = 'exponential-ratio'


@dataclasses.dataclass(frozen=True)
class LengthDist:
    """
    Link length distribution.
    - fixed:             every length is `length`
    - uniform:           uniform in [low, high]
    - exponential-ratio: log-uniform in [length, length * diversity]; with two
                         or more links the extremes are pinned so that the
                         length diversity equals `diversity`
    """
    kind: str = FIXED
    length: float = 1.0
    low: float = 1.0
    high: float = 1.0
    diversity: float = 1.0

    @classmethod
    def fixed(cls, length):
        return cls(FIXED, length=length)

    @classmethod
    def uniform(cls, low, high):
        return cls(UNIFORM, low=low, high=high)

    @classmethod
    def exponential_ratio(cls, diversity, base=1.0):
        return cls(EXPONENTIAL_RATIO, length=base, diversity=diversity)

    def validate(self):
        if self.kind == FIXED:
            ok = self.length > 0.0
        elif self.kind == UNIFORM:
            ok = 0.0 < self.low <= self.high
        elif self.kind == EXPONENTIAL_RATIO:
            ok = self.length > 0.0 and self.diversity >= 1.0
        else:
            raise PreconditionError("unknown length distribution %r" % (self.kind,))
        if not ok:
            raise PreconditionError("invalid %s length distribution: %r" % (self.kind, self))

    def draw(self, rng, n):
        if self.kind == FIXED:
            return np.full(n, float(self.length))
        if self.kind == UNIFORM:
            return rng.uniform(self.low, self.high, size=n)
        lengths = self.length * self.diversity ** rng.uniform(0.0, 1.0, size=n)
        if n >= 2:
            lengths[0] = self.length
            lengths[1] = self.length * self.diversity
        return lengths

    def to_dict(self):
        if self.kind == FIXED:
            return {'kind': FIXED, 'length': self.length}
        if self.kind == UNIFORM:
            return {'kind': UNIFORM, 'low': self.low, 'high': self.high}
        return {'kind': self.kind, 'length': self.length, 'diversity': self.diversity}

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


@dataclasses.dataclass(frozen=True)
class GeneratorSpec:
    n: int
    seed: int = 0
    area_side: float = 100.0
    length_dist: LengthDist = LengthDist()
    model: ModelKind = ModelKind.DIRECTED
    alpha: float = 3.0
    beta: float = 1.0
    noise: float = 0.0

    def validate(self):
        if self.n < 1:
            raise PreconditionError("n must be at least 1, got %r" % self.n)
        if not 0 <= self.seed < 2 ** 64:
            raise PreconditionError("seed must be a 64-bit unsigned integer")
        if not (self.area_side > 0.0 and math.isfinite(self.area_side)):
            raise PreconditionError("area_side must be positive")
        self.length_dist.validate()
        return self

    def to_dict(self):
        return {'n': self.n, 'seed': self.seed, 'area_side': self.area_side,
                'length_dist': self.length_dist.to_dict(),
                'model': ModelKind(self.model).value, 'alpha': self.alpha,
                'beta': self.beta, 'noise': self.noise}

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        if 'length_dist' in d:
            d['length_dist'] = LengthDist.from_dict(d['length_dist'])
        if 'model' in d:
            d['model'] = ModelKind(d['model'])
        return cls(**d)


def generate(spec):
    """ The LinkInstance described by spec; identical for identical specs. """
    spec.validate()
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    senders = rng.uniform(0.0, spec.area_side, size=(spec.n, 2))
    lengths = spec.length_dist.draw(rng, spec.n)
    theta = rng.uniform(0.0, 2.0 * math.pi, size=spec.n)
    receivers = senders + lengths[:, None] * np.column_stack([np.cos(theta), np.sin(theta)])
    links = [Link(k + 1, Point(float(s[0]), float(s[1])), Point(float(r[0]), float(r[1])))
             for k, (s, r) in enumerate(zip(senders, receivers))]
    return LinkInstance(links, spec.model, spec.alpha, spec.beta, spec.noise)
