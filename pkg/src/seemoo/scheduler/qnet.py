"""Attention-based Q-network over the per-model feature rows."""

from __future__ import annotations

import numpy as np

from .. import nn
from ..nn import autograd as ag


class QNetwork(nn.Module):
    """Shared projection, multi-head self-attention, layer norm and a shared value head.

    The same weights act on every row and attention carries no positional
    signal, so permuting the rows of a state permutes the Q-values.
    """

    def __init__(
        self,
        n_features: int = 8,
        width: int = 32,
        heads: int = 4,
        rectifier: bool = True,
        rng: np.random.Generator | None = None,
    ):
        rng = rng if rng is not None else np.random.default_rng(0)
        self.rectifier = rectifier
        self.proj = nn.Linear(n_features, width, rng)
        self.attn = nn.MultiHeadAttention(width, heads, rng)
        self.norm = nn.LayerNorm(width)
        self.head = nn.Linear(width, 1, rng)

    def forward(self, states):
        """Q-values of shape ``(m,)`` for one state or ``(B, m)`` for a batch."""
        x = ag.as_tensor(states)
        if not np.all(np.isfinite(x.data)):
            raise ValueError("state contains non-finite values")
        h = self.norm(self.attn(self.proj(x)))
        q = self.head(h)
        q = ag.reshape(q, q.shape[:-1])
        return ag.relu(q) if self.rectifier else q

    def copy_from(self, other: "QNetwork") -> None:
        self.load_state_dict(other.state_dict())


def q_forward(net: QNetwork, state) -> np.ndarray:
    return net(np.asarray(state, dtype=np.float64)).data
