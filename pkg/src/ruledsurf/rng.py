"""Seeded, splittable randomness for reproducible constructions."""

from __future__ import annotations

import numpy as np


class SeedStream:
    """A counter-based stream: ``child(label)`` derives an independent stream
    deterministically, so results depend only on the seed and the labels."""

    def __init__(self, seed: int | np.random.SeedSequence = 0):
        self.seq = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(int(seed))
        self.gen = np.random.Generator(np.random.Philox(self.seq))

    def child(self, label: str) -> "SeedStream":
        key = [int.from_bytes(label.encode(), "little") % (2 ** 32)]
        seq = np.random.SeedSequence(self.seq.entropy, spawn_key=tuple(self.seq.spawn_key) + tuple(key))
        return SeedStream(seq)

    def field_elements(self, n: int, p: int, nonzero: bool = False) -> list[int]:
        lo = 1 if nonzero else 0
        return [int(x) for x in self.gen.integers(lo, p, size=n)]

    def integer(self, lo: int, hi: int) -> int:
        return int(self.gen.integers(lo, hi))
