"""Minimal numpy network engine with reverse-mode differentiation."""

from .autograd import ShapeError, Tensor, UsageError, as_tensor, mse_loss, parameter
from .gradcheck import grad_check
from .layers import (
    MLP,
    ConfigError,
    LayerNorm,
    LayerParams,
    Linear,
    Module,
    MultiHeadAttention,
    layernorm_forward,
    linear_forward,
    mha_forward,
)
from .optim import Adam, AdamState, NonFiniteGradientError, adam_step

__all__ = [
    "MLP",
    "Adam",
    "AdamState",
    "ConfigError",
    "LayerNorm",
    "LayerParams",
    "Linear",
    "Module",
    "MultiHeadAttention",
    "NonFiniteGradientError",
    "ShapeError",
    "Tensor",
    "UsageError",
    "adam_step",
    "as_tensor",
    "grad_check",
    "layernorm_forward",
    "linear_forward",
    "mha_forward",
    "mse_loss",
    "parameter",
]
