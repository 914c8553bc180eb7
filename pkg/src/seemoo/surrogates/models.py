"""KNN, RBFN and MLP regressors over normalized inputs."""

from __future__ import annotations

import numpy as np

from .. import nn
from ..nn import autograd as ag
from .base import sq_distances
from .kmeans import kmeans


class KNNRegressor:
    """Uniform-weight k-nearest-neighbour average; distance ties go to the earlier row."""

    def __init__(self, k: int = 5):
        self.k = k

    def fit(self, X, Y, rng=None) -> "KNNRegressor":
        self.X, self.Y = X, Y
        self.k_eff = min(self.k, len(X))
        return self

    def predict(self, Xq):
        d2 = sq_distances(Xq, self.X)
        nearest = np.argsort(d2, axis=1, kind="stable")[:, : self.k_eff]
        return self.Y[nearest].mean(axis=1)


class RBFNetwork:
    """Gaussian radial basis network with k-means centers and ridge output layer."""

    def __init__(self, n_centers: int = 50, ridge: float = 1e-8):
        self.n_centers = n_centers
        self.ridge = ridge

    def _design(self, X):
        phi = np.exp(-0.5 * sq_distances(X, self.centers) / self.sigma**2)
        return np.hstack([phi, np.ones((len(X), 1))])

    def fit(self, X, Y, rng: np.random.Generator) -> "RBFNetwork":
        K = min(self.n_centers, len(X))
        self.centers = kmeans(X, K, rng).centers
        spread = np.sqrt(sq_distances(self.centers, self.centers).max())
        self.sigma = spread / np.sqrt(2.0 * K) if spread > 0.0 else 1.0
        H = self._design(X)
        # ridge via an augmented least-squares system; the bias is not penalized
        penalty = np.sqrt(self.ridge) * np.eye(H.shape[1])
        penalty[-1, -1] = 0.0
        A = np.vstack([H, penalty])
        B = np.vstack([Y, np.zeros((H.shape[1], Y.shape[1]))])
        self.weights = np.linalg.lstsq(A, B, rcond=None)[0]
        return self

    def predict(self, Xq):
        return self._design(Xq) @ self.weights


class MLPRegressor:
    """Two-hidden-layer ReLU network per objective, trained full batch with Adam.

    All objectives are trained together as a stack of independent networks
    that start from the same initial weights. Targets are standardized per
    objective inside the model; a constant objective is predicted as that
    constant.
    """

    def __init__(self, epochs: int, hidden: tuple[int, ...] = (32, 32), lr: float = 1e-3):
        self.epochs = epochs
        self.hidden = hidden
        self.lr = lr

    def fit(self, X, Y, rng: np.random.Generator) -> "MLPRegressor":
        m = Y.shape[1]
        self.y_mean = Y.mean(axis=0)
        std = Y.std(axis=0)
        target = ((Y - self.y_mean) / np.where(std > 0.0, std, 1.0)).T[:, :, None]
        # zero scale: a column without variation carries nothing to learn
        self.y_scale = np.where(std > 0.0, std, 0.0)
        self.net = nn.MLP(X.shape[1], self.hidden, 1, n_models=m, rng=rng, shared_init=True)
        opt = nn.Adam(self.net.parameters(), lr=self.lr)
        x = ag.as_tensor(X)
        n = len(X)
        for _ in range(self.epochs):
            opt.zero_grad()
            diff = self.net(x) - target
            # summing per-network means keeps each network's gradient its own
            loss = ag.sum_(ag.square(diff)) * (1.0 / n)
            loss.backward()
            opt.step()
        return self

    def predict(self, Xq):
        out = self.net(ag.as_tensor(Xq)).data[:, :, 0].T
        return out * self.y_scale + self.y_mean
