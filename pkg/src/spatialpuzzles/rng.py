"""Deterministic, platform-independent random number generation.

The stdlib Mersenne Twister is seeded here through a fixed SplitMix64 mix so
that instance construction is reproducible bit-for-bit on any host.  We do not
use `random.Random` at all: every draw comes from our own generator, so dataset
bytes cannot drift with interpreter or libc versions.

Streams are domain-separated: the generator for (seed, game, index) is derived
by hashing a canonical label, so regenerating one game of a dataset never
perturbs another.
"""

from __future__ import annotations

import hashlib

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class Rng:
    """SplitMix64 generator with the handful of draw helpers the samplers use."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n), bias-free via rejection."""
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        limit = (_MASK64 + 1) - ((_MASK64 + 1) % n)
        while True:
            v = self.u64()
            if v < limit:
                return v % n

    def randint(self, a: int, b: int) -> int:
        """Uniform integer in [a, b], both ends inclusive."""
        if b < a:
            raise ValueError("empty range")
        return a + self.randrange(b - a + 1)

    def random(self) -> float:
        return (self.u64() >> 11) * (2.0 ** -53)

    def bit(self) -> int:
        return self.u64() & 1

    def choice(self, seq):
        if not seq:
            raise IndexError("choice from empty sequence")
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, seq, k: int) -> list:
        pool = list(seq)
        if k > len(pool):
            raise ValueError("sample larger than population")
        self.shuffle(pool)
        return pool[:k]


def derive_rng(seed: int, *parts) -> Rng:
    """Generator for a (seed, label...) stream.

    The label is hashed with SHA-256 so distinct games/purposes get independent
    streams even under adversarial seed choices.
    """
    label = "|".join(str(p) for p in parts)
    data = f"spz1|{seed}|{label}".encode("utf-8")
    digest = hashlib.sha256(data).digest()
    return Rng(int.from_bytes(digest[:8], "big"))
