"""DQN agent: online and target Q-networks, replay and the TD update."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .. import nn
from ..nn import autograd as ag
from .qnet import QNetwork
from .replay import ReplayBuffer, Transition

log = logging.getLogger(__name__)


@dataclass
class DQNConfig:
    lr: float = 1e-3
    gamma: float = 0.9
    batch_size: int = 32
    buffer_capacity: int = 256
    target_sync: int = 10  # 0 bootstraps from the online network
    warmup: int = 32
    rectifier: bool = True
    width: int = 32
    heads: int = 4


def td_targets(target_net: QNetwork, batch: list[Transition], gamma: float, enabled=None) -> np.ndarray:
    rewards = np.array([tr.reward for tr in batch])
    terminal = np.array([tr.terminal for tr in batch], dtype=bool)
    q_next = target_net(np.stack([tr.next_state for tr in batch])).data
    if enabled is not None:
        q_next = np.where(np.asarray(enabled, bool), q_next, -np.inf)
    return rewards + np.where(terminal, 0.0, gamma * q_next.max(axis=1))


def dqn_loss(net: QNetwork, batch: list[Transition], targets: np.ndarray):
    states = np.stack([tr.state for tr in batch])
    actions = np.array([tr.action for tr in batch])
    q = net(states)
    chosen = ag.getitem(q, (np.arange(len(batch)), actions))
    return ag.mse_loss(chosen, targets)


class DQNAgent:
    def __init__(self, cfg: DQNConfig | None = None, rng: np.random.Generator | None = None, enabled=None):
        self.cfg = cfg or DQNConfig()
        rng = rng if rng is not None else np.random.default_rng(0)
        self.net = QNetwork(rectifier=self.cfg.rectifier, width=self.cfg.width, heads=self.cfg.heads, rng=rng)
        self.target = QNetwork(rectifier=self.cfg.rectifier, width=self.cfg.width, heads=self.cfg.heads, rng=rng)
        self.target.copy_from(self.net)
        self.optimizer = nn.Adam(self.net.parameters(), lr=self.cfg.lr)
        self.buffer = ReplayBuffer(self.cfg.buffer_capacity)
        self.enabled = np.ones(5, bool) if enabled is None else np.asarray(enabled, bool)
        self.n_updates = 0
        self.n_skipped = 0

    def q_values(self, state) -> np.ndarray:
        return self.net(np.asarray(state, dtype=np.float64)).data

    def update(self, batch: list[Transition]) -> float:
        """One Adam step on the TD loss; returns the loss (nan when skipped)."""
        boot = self.target if self.cfg.target_sync > 0 else self.net
        targets = td_targets(boot, batch, self.cfg.gamma, self.enabled)
        self.optimizer.zero_grad()
        loss = dqn_loss(self.net, batch, targets)
        value = float(loss.data)
        if not np.isfinite(value):
            self.n_skipped += 1
            log.warning("non-finite TD loss; update skipped")
            return float("nan")
        loss.backward()
        try:
            self.optimizer.step()
        except nn.NonFiniteGradientError:
            self.n_skipped += 1
            log.warning("non-finite gradient; update skipped")
            return float("nan")
        self.n_updates += 1
        if self.cfg.target_sync > 0 and self.n_updates % self.cfg.target_sync == 0:
            self.target.copy_from(self.net)
        return value

    def observe(self, transition: Transition, rng: np.random.Generator) -> float | None:
        """Store a transition and train once the buffer holds ``warmup`` items."""
        self.buffer.push(transition)
        if len(self.buffer) < self.cfg.warmup:
            return None
        return self.update(self.buffer.sample(self.cfg.batch_size, rng))
