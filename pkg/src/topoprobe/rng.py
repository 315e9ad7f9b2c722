"""Seeded, counter-based random number generation.

All sampling in this package draws from numpy's Philox bit generator, keyed
directly by a 64-bit user seed. Philox is counter-based, so streams are
reproducible bit for bit across platforms and can be created independently
per trial without coordination.

Batches derive one child seed per trial through ``derive_trial_seed``:

    seed_i = splitmix64((seed + (i + 1) * 0x9E3779B97F4A7C15) mod 2**64)

i.e. the trial index steps the seed by the standard 64-bit golden-gamma
increment and the splitmix64 finalizer scrambles it. The derivation is part
of the public contract: given the same top-level seed, trial i always sees
the same stream, regardless of how many trials run or in what order.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(value: int) -> int:
    """Scramble a 64-bit integer with the splitmix64 finalizer."""
    z = value & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_trial_seed(seed: int, trial: int) -> int:
    """Child seed for one trial of a batch run with the given top-level seed."""
    return splitmix64((seed + (trial + 1) * _GOLDEN_GAMMA) & _MASK64)


def generator(seed: int) -> np.random.Generator:
    """A fresh Philox generator keyed by ``seed``."""
    return np.random.Generator(np.random.Philox(key=seed & _MASK64))
