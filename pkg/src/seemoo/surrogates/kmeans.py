"""Lloyd's k-means with k-means++ seeding."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .base import sq_distances


@dataclass
class KMeansResult:
    centers: np.ndarray
    labels: np.ndarray
    inertia_history: list[float] = field(default_factory=list)
    n_iter: int = 0

    @property
    def inertia(self) -> float:
        return self.inertia_history[-1] if self.inertia_history else 0.0


def kmeans_plus_plus(X: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = len(X)
    idx = [int(rng.integers(n))]
    d2 = sq_distances(X, X[idx])[:, 0]
    for _ in range(1, k):
        total = d2.sum()
        u = rng.random()
        if total > 0.0:
            nxt = int(np.searchsorted(np.cumsum(d2), u * total, side="right"))
            nxt = min(nxt, n - 1)
        else:
            nxt = int(u * n) % n
        idx.append(nxt)
        np.minimum(d2, sq_distances(X, X[nxt : nxt + 1])[:, 0], out=d2)
    return X[idx].copy()


def kmeans(points, k: int, rng: np.random.Generator, max_iter: int = 100) -> KMeansResult:
    """Cluster ``points`` into ``k`` groups.

    When there are no more points than clusters the points themselves are
    returned as centers. Empty clusters keep their previous center, so the
    within-cluster sum of squares never increases between iterations.
    """
    X = np.asarray(points, dtype=np.float64)
    if X.ndim == 1:
        X = X[:, None]  # a 1-D sample of scalars
    if k < 1:
        raise ValueError("k must be positive")
    n = len(X)
    if n <= k:
        return KMeansResult(X.copy(), np.arange(n), [0.0], 0)
    centers = kmeans_plus_plus(X, k, rng)
    labels = np.full(n, -1)
    history: list[float] = []
    it = 0
    for it in range(1, max_iter + 1):
        d2 = sq_distances(X, centers)
        new_labels = np.argmin(d2, axis=1)
        history.append(float(d2[np.arange(n), new_labels].sum()))
        if np.array_equal(new_labels, labels):
            break
        labels = new_labels
        counts = np.bincount(labels, minlength=k)
        sums = np.zeros_like(centers)
        np.add.at(sums, labels, X)
        filled = counts > 0
        centers[filled] = sums[filled] / counts[filled, None]
    else:
        d2 = sq_distances(X, centers)
        labels = np.argmin(d2, axis=1)
        history.append(float(d2[np.arange(n), labels].sum()))
    return KMeansResult(centers, labels, history, it)
