"""Deterministic random source and random configurations.

Reports must reproduce bit-for-bit from a seed, across runs and across
implementations, so the generator is a documented 64-bit linear
congruential generator rather than :mod:`random`:

    state' = (6364136223846793005 * state + 1442695040888963407) mod 2**64

Seeding sets ``state = seed mod 2**64`` and advances once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config.defaults import COORDINATE_BOUND, LCG_INCREMENT, LCG_MULTIPLIER
from .models import Configuration

MASK64 = (1 << 64) - 1


@dataclass
class Lcg64:
    """64-bit LCG; ``next_u32`` returns the high half of each state."""

    state: int

    @classmethod
    def seeded(cls, seed: int) -> "Lcg64":
        rng = cls(seed & MASK64)
        rng.next_u64()
        return rng

    def next_u64(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & MASK64
        return self.state

    def next_u32(self) -> int:
        return self.next_u64() >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` by rejection on 64-bit outputs."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        if span > 1 << 64:
            raise ValueError("range wider than 2**64")
        limit = (1 << 64) - (1 << 64) % span
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span

    def rational(self, lo: int, hi: int, den: int) -> Fraction:
        return Fraction(self.randint(lo * den, hi * den), den)


def random_configuration(n: int, d: int, rng: Lcg64, bound: int = COORDINATE_BOUND) -> Configuration:
    """Integer coordinates uniform in ``[-bound, bound]``."""
    return Configuration(
        d,
        tuple(tuple(Fraction(rng.randint(-bound, bound)) for _ in range(d)) for _ in range(n)),
    )


def circle_point(t: Fraction) -> tuple[Fraction, Fraction]:
    """Rational point ``((1-t^2)/(1+t^2), 2t/(1+t^2))`` on the unit circle."""
    q = 1 + t * t
    return ((1 - t * t) / q, 2 * t / q)


def random_circle_points(count: int, rng: Lcg64, den: int = 97) -> list[tuple[Fraction, Fraction]]:
    """Distinct rational points on the unit circle."""
    params: list[Fraction] = []
    while len(params) < count:
        t = rng.rational(-20, 20, den)
        if t not in params:
            params.append(t)
    return [circle_point(t) for t in params]
