"""Central finite-difference verification of analytic gradients."""

from __future__ import annotations

from typing import Callable

import numpy as np

from . import autograd as ag
from .autograd import Tensor


def _default_loss(model, inputs, targets) -> Tensor:
    return ag.mse_loss(model(ag.as_tensor(inputs)), targets)


def grad_check(
    model,
    inputs,
    targets,
    eps: float = 1e-5,
    loss_fn: Callable[[object, object, object], Tensor] | None = None,
) -> float:
    """Max over all parameter entries of ``|analytic - numeric| / max(1, |analytic|)``.

    ``loss_fn(model, inputs, targets)`` must return a scalar tensor; the
    default is the mean squared error of ``model(inputs)`` against ``targets``.
    """
    if not 1e-7 <= eps <= 1e-3:
        raise ValueError("eps must lie in [1e-7, 1e-3]")
    loss_fn = loss_fn or _default_loss
    params = model.parameters()
    ag.zero_grads(params)
    loss = loss_fn(model, inputs, targets)
    loss.backward()
    analytic = [np.zeros_like(p.data) if p.grad is None else p.grad.copy() for p in params]
    ag.zero_grads(params)

    worst = 0.0
    for p, grad in zip(params, analytic):
        flat = p.data.reshape(-1)
        gflat = grad.reshape(-1)
        for j in range(flat.size):
            orig = flat[j]
            flat[j] = orig + eps
            up = loss_fn(model, inputs, targets).item()
            flat[j] = orig - eps
            down = loss_fn(model, inputs, targets).item()
            flat[j] = orig
            numeric = (up - down) / (2.0 * eps)
            err = abs(gflat[j] - numeric) / max(1.0, abs(gflat[j]))
            worst = max(worst, err)
    return worst
