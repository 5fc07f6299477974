"""SplitMix64, a tiny PRNG with published constants.

Used for every seeded random mode so reports can be reproduced by any
implementation of the same algorithm (Steele, Lea & Flood 2014; the
constants below match the reference ``splitmix64.c``).
"""
from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``.

        Draws are rejected while ``x < 2**64 mod bound`` and the survivor is
        reduced with ``x mod bound``.
        """
        if bound < 1:
            raise ValueError("bound must be positive")
        floor = (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x >= floor:
                return x % bound
