"""Fixed-capacity experience replay."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Transition:
    state: np.ndarray
    action: int
    reward: float
    next_state: np.ndarray
    terminal: bool


class ReplayBuffer:
    def __init__(self, capacity: int = 256):
        if capacity < 1:
            raise ValueError("capacity must be positive")
        self.capacity = capacity
        self._items: deque[Transition] = deque(maxlen=capacity)

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self):
        return iter(self._items)

    def push(self, transition: Transition) -> None:
        self._items.append(transition)

    def sample(self, n: int, rng: np.random.Generator) -> list[Transition]:
        """``n`` uniform draws, with replacement only when the buffer is smaller than ``n``."""
        size = len(self._items)
        if size == 0:
            raise RuntimeError("cannot sample from an empty replay buffer")
        if size < n:
            idx = rng.integers(0, size, size=n)
        else:
            idx = rng.choice(size, size=n, replace=False)
        return [self._items[int(i)] for i in idx]
