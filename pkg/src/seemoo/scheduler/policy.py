"""Epsilon-greedy action choice and its linear schedule."""

from __future__ import annotations

import numpy as np

EPS_START = 0.8
EPS_END = 0.01


def epsilon_at(global_step: int, total_steps: int, start: float = EPS_START, end: float = EPS_END) -> float:
    """Linear decay from ``start`` at step 0 to ``end`` at step ``total_steps - 1``."""
    if total_steps < 1:
        raise ValueError("total_steps must be positive")
    frac = min(1.0, max(0.0, global_step / max(1, total_steps - 1)))
    return start + (end - start) * frac


def select_action(q, epsilon: float, rng: np.random.Generator, enabled=None) -> int:
    """Random enabled action with probability ``epsilon``, else the first argmax.

    Two uniforms are drawn on every call so the stream advances identically
    whichever branch is taken.
    """
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError("epsilon must lie in [0, 1]")
    q = np.asarray(q, dtype=np.float64)
    allowed = np.flatnonzero(np.ones(len(q), bool) if enabled is None else np.asarray(enabled, bool))
    if allowed.size == 0:
        raise ValueError("no enabled actions")
    explore, pick = rng.random(2)
    if explore < epsilon:
        return int(allowed[min(int(pick * allowed.size), allowed.size - 1)])
    return int(allowed[np.argmax(q[allowed])])
