"""Counter-based per-trial random streams.

A trial's stream is addressed by ``(row_key, trial)``: its key is a
SplitMix64 hash of both, and draw j is the SplitMix64 output at position j.
Any trial can be regenerated on its own, in any process.
"""

import numpy as np

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MUL1 = 0xBF58476D1CE4E5B9
MUL2 = 0x94D049BB133111EB
TWO_M53 = 2.0**-53


def mix64(z):
    z &= MASK
    z = ((z ^ (z >> 30)) * MUL1) & MASK
    z = ((z ^ (z >> 27)) * MUL2) & MASK
    return z ^ (z >> 31)


def row_key(master_seed, *indices):
    """64-bit key for one sweep row, hashed by numpy's SeedSequence."""
    return int(np.random.SeedSequence([master_seed, *indices]).generate_state(1, np.uint64)[0])


def trial_key(key, trial):
    return mix64(key ^ mix64((trial + 1) * GAMMA))


class TrialStream:
    """Deterministic stream of uniforms for one trial."""

    def __init__(self, key, trial):
        self._state = trial_key(key, trial)
        self._pos = 0

    def random(self):
        self._pos += 1
        return (mix64(self._state + self._pos * GAMMA) >> 11) * TWO_M53

    def uniform(self, low=0.0, high=1.0, size=None):
        if size is None:
            return low + (high - low) * self.random()
        return np.array([low + (high - low) * self.random() for _ in range(size)])


def _mix64_np(z):
    z = z ^ (z >> np.uint64(30))
    z = z * np.uint64(MUL1)
    z = z ^ (z >> np.uint64(27))
    z = z * np.uint64(MUL2)
    return z ^ (z >> np.uint64(31))


def uniforms(key, start, stop, draws):
    """(stop - start, draws) array: the first `draws` uniforms of each trial."""
    with np.errstate(over="ignore"):
        t = np.arange(start, stop, dtype=np.uint64)
        keys = _mix64_np(np.uint64(key) ^ _mix64_np((t + np.uint64(1)) * np.uint64(GAMMA)))
        pos = np.arange(1, draws + 1, dtype=np.uint64) * np.uint64(GAMMA)
        z = _mix64_np(keys[:, None] + pos[None, :])
    return (z >> np.uint64(11)).astype(np.float64) * TWO_M53
