"""Seeded random streams.

A :class:`SeededRng` wraps a PCG64 generator built from a ``SeedSequence``.
Child streams are derived by appending integer keys to the spawn key, so
``SeededRng(seed).child(i)`` is the same stream no matter how many other
children were created before it, or in which process.
"""
from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1


class SeededRng:
    __slots__ = ("seed", "key", "generator")

    def __init__(self, seed: int, key: tuple[int, ...] = ()):
        seed = int(seed)
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self.key = tuple(int(k) for k in key)
        ss = np.random.SeedSequence(entropy=seed, spawn_key=self.key)
        self.generator = np.random.Generator(np.random.PCG64(ss))

    def child(self, *keys: int) -> "SeededRng":
        """Independent stream for ``keys`` (e.g. a trial index)."""
        return SeededRng(self.seed, self.key + tuple(keys))

    def __repr__(self):
        return f"SeededRng(seed={self.seed}, key={self.key})"

    # thin passthroughs used throughout the package
    def random(self, size=None):
        return self.generator.random(size)

    def integers(self, low, high=None, size=None):
        return self.generator.integers(low, high, size=size)

    def permutation(self, x):
        return self.generator.permutation(x)

    def normal(self, size=None):
        return self.generator.standard_normal(size)

    def binomial(self, n, p):
        return self.generator.binomial(n, p)


def as_rng(rng: SeededRng | int | None) -> SeededRng:
    if isinstance(rng, SeededRng):
        return rng
    if rng is None:
        return SeededRng(0)
    return SeededRng(int(rng))
