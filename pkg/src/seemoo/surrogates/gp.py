"""Gaussian-process regression with a constant-times-RBF kernel."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_solve, lapack

from ..nn.optim import AdamState, adam_step
from .base import SingularKernelError, sq_distances

LENGTH_BOUNDS = (1e-2, 1e2)
AMPLITUDE_BOUNDS = (1e-5, 1e5)
_LOG2PI = np.log(2.0 * np.pi)


@dataclass(frozen=True)
class GPHyperparams:
    amplitude: float = 1.0
    length_scale: float = 1.0
    jitter: float = 1e-10

    @property
    def theta(self) -> np.ndarray:
        return np.log([self.amplitude, self.length_scale])


def _cholesky(K: np.ndarray, overwrite: bool = False) -> np.ndarray | None:
    L, info = lapack.dpotrf(K, lower=1, clean=1, overwrite_a=int(overwrite))
    return L if info == 0 else None


def _scaled_kernel(R: np.ndarray, amplitude: float, jitter: float) -> np.ndarray:
    K = R * amplitude
    K.flat[:: len(R) + 1] += jitter
    return K


def factor_kernel(R: np.ndarray, amplitude: float, jitter: float, retries: int = 3):
    """Cholesky of ``amplitude * R + jitter I``, growing jitter tenfold on failure.

    Returns:
        ``(L, jitter_used)``.

    Raises:
        SingularKernelError: Still not positive definite after ``retries``.
    """
    for attempt in range(retries + 1):
        L = _cholesky(_scaled_kernel(R, amplitude, jitter), overwrite=True)
        if L is not None:
            return L, jitter
        if attempt < retries:
            jitter *= 10.0
    raise SingularKernelError(f"kernel not positive definite with jitter {jitter:g}")


def _lml(L: np.ndarray, y: np.ndarray) -> tuple[float, np.ndarray]:
    alpha = cho_solve((L, True), y)
    value = -0.5 * y @ alpha - np.log(np.diag(L)).sum() - 0.5 * len(y) * _LOG2PI
    return float(value), alpha


def gp_log_marginal_likelihood(hp: GPHyperparams, inputs, targets) -> float:
    """Log marginal likelihood of ``targets`` under ``A * RBF + jitter I``.

    Raises:
        SingularKernelError: Cholesky failed; callers may retry with more jitter.
    """
    X = np.atleast_2d(np.asarray(inputs, dtype=np.float64))
    y = np.asarray(targets, dtype=np.float64).ravel()
    R = np.exp(-0.5 * sq_distances(X, X) / hp.length_scale**2)
    L = _cholesky(_scaled_kernel(R, hp.amplitude, hp.jitter))
    if L is None:
        raise SingularKernelError("kernel not positive definite")
    return _lml(L, y)[0]


def lml_and_grad(theta: np.ndarray, D2: np.ndarray, y: np.ndarray, jitter: float):
    """LML and its gradient in ``(log amplitude, log length-scale)``.

    Uses d/dθ LML = ½ tr((ααᵀ - K⁻¹) dK/dθ). For the amplitude dK/dθ = K - jI,
    so that component reduces to ½(yᵀα - j αᵀα - n + j tr K⁻¹).
    """
    amp, ls = np.exp(theta)
    R = np.exp(D2 * (-0.5 / ls**2))
    L, jitter = factor_kernel(R, amp, jitter)
    value, alpha = _lml(L, y)
    # lower triangle of K⁻¹; the upper part of L is zero so potri leaves it zero
    Kinv_low, info = lapack.dpotri(L, lower=1)
    if info != 0:
        raise SingularKernelError("kernel inverse failed")
    RD = R * D2  # zero diagonal, so the trace term only needs the lower triangle
    scale = amp / ls**2
    g_ls = 0.5 * scale * (alpha @ RD @ alpha - 2.0 * np.vdot(Kinv_low, RD))
    g_amp = 0.5 * (y @ alpha - jitter * (alpha @ alpha) - len(y) + jitter * np.trace(Kinv_low))
    return value, np.array([g_amp, g_ls])


def _refined_weights(L: np.ndarray, K: np.ndarray, y: np.ndarray, steps: int = 2) -> np.ndarray:
    """Weights for the noise-free mean, refined against ``K`` without jitter.

    Solving with the jittered factor leaves a training residual of exactly
    ``jitter * alpha``, which grows with ill-conditioning. Each refinement step
    reuses the factor as a preconditioner and is kept only if it shrinks the
    residual.
    """
    alpha = cho_solve((L, True), y)
    err = np.abs(y - K @ alpha).max()
    for _ in range(steps):
        cand = alpha + cho_solve((L, True), y - K @ alpha)
        cand_err = np.abs(y - K @ cand).max()
        if not cand_err < err:
            break
        alpha, err = cand, cand_err
    return alpha


class GaussianProcess:
    """One independent GP per target column, hyperparameters by LML ascent.

    Args:
        n_restarts: Extra log-uniform starting points besides ``(1, 1)``.
        steps: Adam iterations per start.
        lr: Adam step size in log space.
        normalize_y: Standardize targets before fitting.
    """

    def __init__(
        self,
        jitter: float = 1e-10,
        n_restarts: int = 2,
        steps: int = 100,
        lr: float = 0.1,
        normalize_y: bool = False,
        length_bounds: tuple[float, float] = LENGTH_BOUNDS,
        amplitude_bounds: tuple[float, float] = AMPLITUDE_BOUNDS,
    ):
        self.jitter = jitter
        self.n_restarts = n_restarts
        self.steps = steps
        self.lr = lr
        self.normalize_y = normalize_y
        self.lo = np.log([amplitude_bounds[0], length_bounds[0]])
        self.hi = np.log([amplitude_bounds[1], length_bounds[1]])
        self.hyperparams: list[GPHyperparams] = []

    def _optimize(self, theta0, D2, y):
        theta = np.clip(np.asarray(theta0, dtype=np.float64), self.lo, self.hi)
        best_theta, best_value = theta.copy(), -np.inf
        state = AdamState.zeros_like([theta])
        for step in range(self.steps + 1):
            try:
                value, grad = lml_and_grad(theta, D2, y, self.jitter)
            except SingularKernelError:
                break
            if value > best_value:
                best_theta, best_value = theta.copy(), value
            if step == self.steps or not np.all(np.isfinite(grad)):
                break
            (theta,) = adam_step([theta], [-grad], state, self.lr)
            theta = np.clip(theta, self.lo, self.hi)
        return best_theta, best_value

    def fit(self, X: np.ndarray, Y: np.ndarray, rng: np.random.Generator) -> "GaussianProcess":
        self.X = X
        D2 = sq_distances(X, X)
        if self.normalize_y:
            self.y_mean = Y.mean(axis=0)
            std = Y.std(axis=0)
            self.y_scale = np.where(std > 0.0, std, 1.0)
        else:
            self.y_mean = np.zeros(Y.shape[1])
            self.y_scale = np.ones(Y.shape[1])
        Yn = (Y - self.y_mean) / self.y_scale
        # one set of starts shared by all columns keeps objectives exchangeable
        starts = [np.zeros(2)] + list(rng.uniform(self.lo, self.hi, size=(self.n_restarts, 2)))
        self.hyperparams, self.alphas = [], []
        for j in range(Y.shape[1]):
            y = Yn[:, j]
            results = [self._optimize(s, D2, y) for s in starts]
            theta, value = max(results, key=lambda r: r[1])
            if not np.isfinite(value):
                raise SingularKernelError("no starting point gave a valid kernel")
            amp, ls = np.exp(theta)
            R = np.exp(-0.5 * D2 / ls**2)
            L, jit = factor_kernel(R, amp, self.jitter)
            self.hyperparams.append(GPHyperparams(float(amp), float(ls), jit))
            self.alphas.append(_refined_weights(L, amp * R, y))
        return self

    def predict(self, Xq: np.ndarray) -> np.ndarray:
        D2 = sq_distances(Xq, self.X)
        out = np.empty((len(Xq), len(self.alphas)))
        for j, (hp, alpha) in enumerate(zip(self.hyperparams, self.alphas)):
            out[:, j] = hp.amplitude * np.exp(-0.5 * D2 / hp.length_scale**2) @ alpha
        return out * self.y_scale + self.y_mean
