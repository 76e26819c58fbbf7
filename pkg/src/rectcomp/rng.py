"""Seedable, portable random generator for reproducible sampling.

SplitMix64 (Steele, Lea & Flood's 64-bit mixing generator): a single
64-bit counter stepped by the golden-ratio increment and scrambled with
two xor-multiply rounds.  Pure integer arithmetic, so identical seeds
give identical streams on every platform and Python version.
"""
from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

#: Extra bits drawn beyond a bound's width so that the modulo reduction's
#: bias stays below 2**-128.
_DEBIAS_BITS = 128


class SplitMix64:
    """SplitMix64 stream over 64-bit words."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def bits(self, nbits: int) -> int:
        """Uniform integer of ``nbits`` bits, built from whole 64-bit words."""
        words = -(-nbits // 64)
        value = 0
        for _ in range(words):
            value = (value << 64) | self.next_u64()
        return value >> (words * 64 - nbits)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), without a rejection loop.

        Draws ``bound.bit_length() + 128`` bits and reduces modulo the
        bound; the resulting bias is below 2**-128, and the number of
        words consumed per call is a fixed function of the bound.
        """
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        if bound == 1:
            return 0
        return self.bits(bound.bit_length() + _DEBIAS_BITS) % bound
