"""Named, independent random streams derived from one master seed."""

from __future__ import annotations

import zlib

import numpy as np

EPISODE_STREAMS = ("lhs", "variation", "mlp-init", "epsilon", "kmeans", "gp")
AGENT_STREAMS = ("init", "replay", "shuffle")

EVAL_TAG = 0


def problem_key(problem) -> int:
    """Stable integer identifying a problem variant (id, dimensions)."""
    text = f"{problem.label}:{problem.n_var}"
    return zlib.crc32(text.encode("utf-8"))


def episode_streams(seed: int, problem, tag: int) -> dict[str, np.random.Generator]:
    """One generator per named stream for a ``(seed, problem, tag)`` episode.

    Streams depend only on their own name, so changing how one of them is
    consumed (for example swapping the policy) never shifts another.
    """
    key = problem_key(problem)
    return {
        name: np.random.default_rng(np.random.SeedSequence([int(seed), key, int(tag), i]))
        for i, name in enumerate(EPISODE_STREAMS)
    }


def agent_streams(seed: int) -> dict[str, np.random.Generator]:
    return {
        name: np.random.default_rng(np.random.SeedSequence([int(seed), 0x5EE, i]))
        for i, name in enumerate(AGENT_STREAMS)
    }


def train_tag(epoch: int) -> int:
    return 1 + int(epoch)
