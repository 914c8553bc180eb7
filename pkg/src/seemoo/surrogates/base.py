"""Shared surrogate plumbing: action ids, input scaling, errors."""

from __future__ import annotations

from enum import IntEnum

import numpy as np


class SurrogateKind(IntEnum):
    """Model pool; the integer value is the scheduler's action id."""

    GP = 0
    MLP1 = 1
    MLP2 = 2
    KNN = 3
    RBFN = 4

    @property
    def label(self) -> str:
        return self.name.lower()


N_KINDS = len(SurrogateKind)


class InsufficientDataError(ValueError):
    """Fewer than two training rows."""


class NotFittedError(RuntimeError):
    """``predict`` called before ``fit``."""


class SingularKernelError(np.linalg.LinAlgError):
    """Kernel matrix stayed indefinite after all jitter retries."""


class InputScaler:
    """Per-dimension z-score; constant dimensions keep unit scale."""

    def __init__(self, X: np.ndarray):
        X = np.asarray(X, dtype=np.float64)
        self.mean = X.mean(axis=0)
        std = X.std(axis=0)
        self.scale = np.where(std > 0.0, std, 1.0)

    def __call__(self, X) -> np.ndarray:
        return (np.asarray(X, dtype=np.float64) - self.mean) / self.scale


def check_training_data(X, Y) -> tuple[np.ndarray, np.ndarray]:
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    Y = np.asarray(Y, dtype=np.float64)
    if Y.ndim == 1:
        Y = Y[:, None]
    if len(X) != len(Y):
        raise ValueError(f"{len(X)} inputs but {len(Y)} targets")
    if len(X) < 2:
        raise InsufficientDataError("surrogates need at least two training points")
    if not (np.all(np.isfinite(X)) and np.all(np.isfinite(Y))):
        raise ValueError("training data must be finite")
    return X, Y


def sq_distances(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Pairwise squared Euclidean distances, clipped at zero."""
    d = (A * A).sum(1)[:, None] + (B * B).sum(1)[None, :] - 2.0 * A @ B.T
    return np.maximum(d, 0.0)
