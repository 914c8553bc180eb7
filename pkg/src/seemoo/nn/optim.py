"""Adam with bias correction."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .autograd import Tensor


class NonFiniteGradientError(FloatingPointError):
    """A gradient contained NaN or infinity; the update was not applied."""


@dataclass
class AdamState:
    first: list[np.ndarray]
    second: list[np.ndarray]
    step: int = 0
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8

    @classmethod
    def zeros_like(cls, arrays, **kwargs) -> "AdamState":
        return cls(
            first=[np.zeros_like(a, dtype=np.float64) for a in arrays],
            second=[np.zeros_like(a, dtype=np.float64) for a in arrays],
            **kwargs,
        )


def adam_step(params: list[np.ndarray], grads: list[np.ndarray], state: AdamState, lr: float):
    """Return updated copies of ``params``; ``state`` is advanced in place."""
    if lr <= 0:
        raise ValueError("learning rate must be positive")
    if len(params) != len(grads) or len(params) != len(state.first):
        raise ValueError("params, grads and state have different lengths")
    for g in grads:
        if not np.all(np.isfinite(g)):
            raise NonFiniteGradientError("non-finite gradient")
    state.step += 1
    t = state.step
    b1, b2 = state.beta1, state.beta2
    corr1 = 1.0 - b1**t
    corr2 = 1.0 - b2**t
    out = []
    for i, (p, g) in enumerate(zip(params, grads)):
        if p.shape != g.shape:
            raise ValueError(f"parameter {i} shape {p.shape} vs gradient {g.shape}")
        state.first[i] = b1 * state.first[i] + (1.0 - b1) * g
        state.second[i] = b2 * state.second[i] + (1.0 - b2) * (g * g)
        m_hat = state.first[i] / corr1
        v_hat = state.second[i] / corr2
        out.append(p - lr * m_hat / (np.sqrt(v_hat) + state.eps))
    return out


@dataclass
class Adam:
    """Stateful wrapper applying :func:`adam_step` to tensors' gradients."""

    params: list[Tensor]
    lr: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    state: AdamState = field(init=False)

    def __post_init__(self):
        self.state = AdamState.zeros_like(
            [p.data for p in self.params], beta1=self.beta1, beta2=self.beta2, eps=self.eps
        )

    def zero_grad(self) -> None:
        for p in self.params:
            p.grad = None

    def step(self) -> None:
        grads = [np.zeros_like(p.data) if p.grad is None else p.grad for p in self.params]
        new = adam_step([p.data for p in self.params], grads, self.state, self.lr)
        for p, value in zip(self.params, new):
            p.data = value
