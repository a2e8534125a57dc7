"""
Seeded corpora of integrally closed m-primary monomial ideals.

Random source: SplitMix64 (Steele, Lea and Flood). Each step adds the golden
gamma 0x9E3779B97F4A7C15 to a 64-bit state and mixes it with two
xor-shift-multiply rounds. Bounded draws use rejection sampling, so a
(seed, CorpusSpec) pair yields the same stream in any implementation.
"""
from typing import Iterator, List

from schemas.ideal_schema import MonomialIdeal
from schemas.verify_schema import CorpusSpec
from services import ideal_service, newton_service

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)


def random_ideal(rng: SplitMix64, spec: CorpusSpec) -> MonomialIdeal:
    """Sampled generators in the box plus one random pure power per variable."""
    d = spec.dim
    gens: List[tuple] = []
    for _ in range(rng.between(spec.min_generators, spec.max_generators)):
        while True:
            g = tuple(rng.between(0, spec.box) for _ in range(d))
            if any(g):
                break
        gens.append(g)
    for j in range(d):
        gens.append(tuple(rng.between(1, spec.box) if i == j else 0 for i in range(d)))
    return ideal_service.minimalize(gens, d)


def random_integrally_closed(spec: CorpusSpec) -> Iterator[MonomialIdeal]:
    """`spec.trials` integrally closed m-primary ideals, deterministic in spec.seed."""
    rng = SplitMix64(spec.seed)
    for _ in range(spec.trials):
        yield newton_service.integral_closure(random_ideal(rng, spec))
