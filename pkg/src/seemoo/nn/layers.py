"""Dense building blocks: linear, layer norm, multi-head attention, MLP."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import autograd as ag
from .autograd import Tensor


class ConfigError(ValueError):
    """Raised for inconsistent layer hyperparameters."""


def glorot_uniform(rng: np.random.Generator, fan_in: int, fan_out: int, shape=None) -> np.ndarray:
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=shape or (fan_in, fan_out))


class Module:
    """Container of named parameters; subclasses define ``forward``."""

    def named_parameters(self, prefix: str = "") -> list[tuple[str, Tensor]]:
        out = []
        for key, value in vars(self).items():
            name = f"{prefix}{key}"
            if isinstance(value, Tensor) and value.requires_grad:
                out.append((name, value))
            elif isinstance(value, Module):
                out.extend(value.named_parameters(prefix=f"{name}."))
        return out

    def parameters(self) -> list[Tensor]:
        return [p for _, p in self.named_parameters()]

    def zero_grad(self) -> None:
        ag.zero_grads(self.parameters())

    def state_dict(self) -> list[tuple[str, np.ndarray]]:
        return [(name, p.data.copy()) for name, p in self.named_parameters()]

    def load_state_dict(self, state) -> None:
        params = dict(self.named_parameters())
        incoming = dict(state)
        if set(params) != set(incoming):
            missing = sorted(set(params) ^ set(incoming))
            raise KeyError(f"parameter names differ: {missing}")
        for name, p in params.items():
            arr = np.asarray(incoming[name], dtype=np.float64)
            if arr.shape != p.shape:
                raise ag.ShapeError(f"{name}: expected {p.shape}, got {arr.shape}")
            p.data = arr.copy()

    def __call__(self, *args, **kwargs):
        return self.forward(*args, **kwargs)


@dataclass
class LayerParams:
    weights: np.ndarray
    biases: np.ndarray


class Linear(Module):
    """``y = x @ W + b`` applied to the last axis."""

    def __init__(self, in_features: int, out_features: int, rng: np.random.Generator | None = None):
        rng = rng if rng is not None else np.random.default_rng(0)
        self.in_features = in_features
        self.out_features = out_features
        self.weight = ag.parameter(glorot_uniform(rng, in_features, out_features))
        self.bias = ag.parameter(np.zeros(out_features))

    def forward(self, x) -> Tensor:
        x = ag.as_tensor(x)
        if x.shape[-1] != self.in_features:
            raise ag.ShapeError(f"expected width {self.in_features}, got {x.shape[-1]}")
        return ag.matmul(x, self.weight) + self.bias


def linear_forward(x, layer: LayerParams) -> np.ndarray:
    """Plain-array linear map used where no gradient is needed."""
    x = np.atleast_2d(np.asarray(x, dtype=np.float64))
    w = np.asarray(layer.weights, dtype=np.float64)
    b = np.asarray(layer.biases, dtype=np.float64)
    if x.shape[-1] != w.shape[0]:
        raise ag.ShapeError(f"input width {x.shape[-1]} vs weight rows {w.shape[0]}")
    if b.shape != (w.shape[1],):
        raise ag.ShapeError("bias length must equal output width")
    return x @ w + b


class LayerNorm(Module):
    def __init__(self, width: int, eps: float = 1e-5):
        self.eps = eps
        self.gain = ag.parameter(np.ones(width))
        self.shift = ag.parameter(np.zeros(width))

    def forward(self, x) -> Tensor:
        return ag.layer_norm(ag.as_tensor(x), self.gain, self.shift, self.eps)


def layernorm_forward(x, gain, shift, eps: float = 1e-5) -> np.ndarray:
    return ag.layer_norm(ag.as_tensor(x), ag.as_tensor(gain), ag.as_tensor(shift), eps).data


class MultiHeadAttention(Module):
    """Scaled dot-product self-attention over the row axis.

    The query/key/value matrices are stored as ``width x width`` blocks whose
    column slices of size ``width // heads`` are the per-head projections.
    No masking, no dropout and no projection biases.
    """

    def __init__(self, width: int, heads: int = 4, rng: np.random.Generator | None = None):
        if width % heads:
            raise ConfigError(f"width {width} is not divisible by {heads} heads")
        rng = rng if rng is not None else np.random.default_rng(0)
        self.width = width
        self.heads = heads
        self.head_width = width // heads
        self.w_query = ag.parameter(glorot_uniform(rng, width, width))
        self.w_key = ag.parameter(glorot_uniform(rng, width, width))
        self.w_value = ag.parameter(glorot_uniform(rng, width, width))
        self.w_out = ag.parameter(glorot_uniform(rng, width, width))

    def _split(self, t: Tensor) -> Tensor:
        # (..., m, width) -> (..., heads, m, head_width)
        lead = t.shape[:-2]
        m = t.shape[-2]
        t = ag.reshape(t, lead + (m, self.heads, self.head_width))
        return ag.swapaxes(t, -2, -3)

    def forward(self, x) -> Tensor:
        x = ag.as_tensor(x)
        if x.shape[-1] != self.width:
            raise ag.ShapeError(f"expected width {self.width}, got {x.shape[-1]}")
        q = self._split(x @ self.w_query)
        k = self._split(x @ self.w_key)
        v = self._split(x @ self.w_value)
        scores = ag.matmul(q, ag.swapaxes(k, -1, -2)) * (1.0 / np.sqrt(self.head_width))
        weights = ag.softmax(scores, axis=-1)
        heads = ag.matmul(weights, v)
        lead = x.shape[:-2]
        m = x.shape[-2]
        merged = ag.reshape(ag.swapaxes(heads, -2, -3), lead + (m, self.width))
        return merged @ self.w_out


def mha_forward(x, module: MultiHeadAttention) -> np.ndarray:
    return module(ag.as_tensor(x)).data


class MLP(Module):
    """ReLU multilayer perceptron, optionally holding a stack of independent nets.

    With ``n_models > 1`` every weight carries a leading model axis and a 2-D
    input is broadcast to all models, so one pass trains several networks
    that share no parameters.
    """

    def __init__(
        self,
        in_features: int,
        hidden: tuple[int, ...],
        out_features: int = 1,
        n_models: int = 1,
        rng: np.random.Generator | None = None,
        shared_init: bool = True,
    ):
        rng = rng if rng is not None else np.random.default_rng(0)
        self.n_models = n_models
        self.depth = len(hidden) + 1
        sizes = (in_features, *hidden, out_features)
        for i, (fi, fo) in enumerate(zip(sizes[:-1], sizes[1:])):
            if shared_init:
                w = np.broadcast_to(glorot_uniform(rng, fi, fo), (n_models, fi, fo)).copy()
            else:
                w = glorot_uniform(rng, fi, fo, shape=(n_models, fi, fo))
            setattr(self, f"w{i}", ag.parameter(w))
            setattr(self, f"b{i}", ag.parameter(np.zeros((n_models, 1, fo))))

    def forward(self, x) -> Tensor:
        h = ag.as_tensor(x)
        for i in range(self.depth):
            h = ag.matmul(h, getattr(self, f"w{i}")) + getattr(self, f"b{i}")
            if i < self.depth - 1:
                h = ag.relu(h)
        return h
