"""Uniform fit/predict interface over the five surrogate kinds."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .base import InputScaler, NotFittedError, SurrogateKind, check_training_data
from .gp import GaussianProcess
from .models import KNNRegressor, MLPRegressor, RBFNetwork


@dataclass
class SurrogateOptions:
    gp_restarts: int = 2
    gp_steps: int = 100
    gp_lr: float = 0.1
    gp_jitter: float = 1e-10
    gp_normalize_y: bool = False
    mlp_hidden: tuple[int, ...] = (32, 32)
    mlp_lr: float = 1e-3
    mlp1_epochs: int = 300
    mlp2_epochs: int = 500
    knn_k: int = 5
    rbf_centers: int = 50
    rbf_ridge: float = 1e-8


def _regressor(kind: SurrogateKind, opts: SurrogateOptions):
    if kind is SurrogateKind.GP:
        return GaussianProcess(opts.gp_jitter, opts.gp_restarts, opts.gp_steps, opts.gp_lr, opts.gp_normalize_y)
    if kind is SurrogateKind.MLP1:
        return MLPRegressor(opts.mlp1_epochs, opts.mlp_hidden, opts.mlp_lr)
    if kind is SurrogateKind.MLP2:
        return MLPRegressor(opts.mlp2_epochs, opts.mlp_hidden, opts.mlp_lr)
    if kind is SurrogateKind.KNN:
        return KNNRegressor(opts.knn_k)
    if kind is SurrogateKind.RBFN:
        return RBFNetwork(opts.rbf_centers, opts.rbf_ridge)
    raise ValueError(f"unknown surrogate kind {kind!r}")


@dataclass
class SurrogateModel:
    """A fitted surrogate mapping decision vectors to all objectives."""

    kind: SurrogateKind
    n_var: int
    n_obj: int
    scaler: InputScaler
    regressor: object
    train_mse: float = field(default=float("nan"))

    def predict(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.ndim == 1:
            X = X[None, :]
        if X.shape[1] != self.n_var:
            raise ValueError(f"expected {self.n_var} variables, got {X.shape[1]}")
        if len(X) == 0:
            return np.empty((0, self.n_obj))
        return self.regressor.predict(self.scaler(X))


def fit_surrogate(kind, X, Y, rng: np.random.Generator | int | None = None, options: SurrogateOptions | None = None) -> SurrogateModel:
    """Fit one surrogate of ``kind`` on inputs ``X`` and objectives ``Y``.

    Raises:
        InsufficientDataError: Fewer than two rows.
        SingularKernelError: GP kernel could not be factorized.
    """
    kind = SurrogateKind(kind)
    X, Y = check_training_data(X, Y)
    rng = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    scaler = InputScaler(X)
    reg = _regressor(kind, options or SurrogateOptions()).fit(scaler(X), Y, rng)
    model = SurrogateModel(kind, X.shape[1], Y.shape[1], scaler, reg)
    model.train_mse = training_mse(model, X, Y)
    return model


def predict(model: SurrogateModel | None, X) -> np.ndarray:
    if model is None:
        raise NotFittedError("surrogate has not been fitted")
    return model.predict(X)


def training_mse(model: SurrogateModel, X, Y) -> float:
    """Mean squared prediction error over rows and objectives."""
    Y = np.asarray(Y, dtype=np.float64)
    if Y.ndim == 1:
        Y = Y[:, None]
    return float(np.mean((predict(model, X) - Y) ** 2))
