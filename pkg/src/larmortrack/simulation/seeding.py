from __future__ import annotations

import numpy as np


def run_streams(seed: int) -> tuple[np.random.SeedSequence, np.random.SeedSequence]:
    """Independent ``(signal, outcomes)`` streams derived from one run seed."""
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed!r}")
    signal, outcomes = np.random.SeedSequence(seed).spawn(2)
    return signal, outcomes


def outcome_generator(seed: int) -> np.random.Generator:
    return np.random.default_rng(run_streams(seed)[1])


def derived_seed(*keys: int) -> int:
    """Stable 63-bit seed for a tuple of integer keys (sweep point, run index, ...)."""
    state = np.random.SeedSequence(list(keys)).generate_state(1, dtype=np.uint64)
    return int(state[0]) >> 1
