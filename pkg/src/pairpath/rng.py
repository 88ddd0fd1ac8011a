"""Portable deterministic randomness for reproducible pairings.

Uses splitmix64 so that a recorded seed reproduces the identical pairing on
any platform or Python version; the stdlib Mersenne generator carries no such
cross-version guarantee for shuffles.
"""
from __future__ import annotations

from typing import MutableSequence

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64 sequence generator; state advances by the 64-bit golden gamma."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, bound: int) -> int:
        # modulo bias is below 2^-50 for any bound this package draws
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next_u64() % bound

    def shuffle(self, xs: MutableSequence) -> None:
        """In-place Fisher-Yates, high index down."""
        for i in range(len(xs) - 1, 0, -1):
            j = self.randrange(i + 1)
            xs[i], xs[j] = xs[j], xs[i]


def random_permutation(n: int, seed: int) -> list[int]:
    xs = list(range(n))
    SplitMix64(seed).shuffle(xs)
    return xs
