"""Per-user random streams for reproducible simulations."""

from typing import List

import numpy as np


def user_stream(seed: int, user_index: int) -> np.random.Generator:
    """
    Independent PCG64 stream for one user.

    The stream is keyed by (seed, user_index) through SeedSequence spawn keys,
    so a user's draws never depend on how many draws other users made.
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(user_index,))))


def user_streams(seed: int, m_users: int) -> List[np.random.Generator]:
    """One stream per user, indexed like the users."""
    return [user_stream(seed, index) for index in range(m_users)]
