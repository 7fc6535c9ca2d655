"""
Counter-based splitmix64 generator. The same seed always yields the same stream, whatever process or
thread draws from it, which keeps factorizations and campaigns reproducible.
"""

from __future__ import annotations

import dataclasses

_MASK = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


@dataclasses.dataclass
class RngState:
    seed: int
    counter: int = 0

    def __post_init__(self):
        self.seed &= _MASK

    def next_u64(self) -> int:
        self.counter += 1
        return _mix((self.seed + self.counter * _GOLDEN_GAMMA) & _MASK)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), by rejection so there is no modulo bias."""
        if n <= 0:
            raise ValueError(f"Empty range: {n}")
        if n == 1:
            return 0
        bits = (n - 1).bit_length()
        while True:
            value = 0
            for _ in range((bits + 63) // 64):
                value = (value << 64) | self.next_u64()
            value &= (1 << bits) - 1
            if value < n:
                return value

    def spawn(self, label: int) -> RngState:
        """An independent stream derived from this seed and a label, e.g. a case index."""
        return RngState(_mix((self.seed ^ _mix(label & _MASK)) & _MASK))
