"""Non-dominated sorting and crowding distance."""

from __future__ import annotations

import numpy as np


def dominance_matrix(F: np.ndarray) -> np.ndarray:
    """``D[i, j]`` is True when row ``i`` dominates row ``j``."""
    le = np.all(F[:, None, :] <= F[None, :, :], axis=2)
    lt = np.any(F[:, None, :] < F[None, :, :], axis=2)
    return le & lt


def fast_nondominated_sort(F) -> list[np.ndarray]:
    """Partition row indices of ``F`` into successive Pareto fronts.

    Returns:
        List of index arrays in ascending order; front 0 is non-dominated.
    """
    F = np.atleast_2d(np.asarray(F, dtype=np.float64))
    n = len(F)
    if n == 0:
        return []
    D = dominance_matrix(F)
    counts = D.sum(axis=0)
    fronts = []
    current = np.flatnonzero(counts == 0)
    while current.size:
        fronts.append(current)
        counts = counts - D[current].sum(axis=0)
        counts[current] = -1
        current = np.flatnonzero(counts == 0)
    return fronts


def front_ranks(fronts: list[np.ndarray], n: int) -> np.ndarray:
    rank = np.empty(n, dtype=np.int64)
    for k, idx in enumerate(fronts):
        rank[idx] = k
    return rank


def crowding_distance(F) -> np.ndarray:
    """Crowding distance of each row within a single front.

    Extreme points in any objective get infinity, as do all members of
    fronts with at most two points. An objective with zero range adds 0.
    """
    F = np.atleast_2d(np.asarray(F, dtype=np.float64))
    n, m = F.shape
    if n <= 2:
        return np.full(n, np.inf)
    dist = np.zeros(n)
    for j in range(m):
        order = np.argsort(F[:, j], kind="stable")
        f = F[order, j]
        span = f[-1] - f[0]
        dist[order[0]] = np.inf
        dist[order[-1]] = np.inf
        if span > 0.0:
            dist[order[1:-1]] += (f[2:] - f[:-2]) / span
    return dist


def rank_and_crowding(F) -> tuple[np.ndarray, np.ndarray, list[np.ndarray]]:
    F = np.atleast_2d(np.asarray(F, dtype=np.float64))
    fronts = fast_nondominated_sort(F)
    rank = front_ranks(fronts, len(F))
    crowd = np.empty(len(F))
    for idx in fronts:
        crowd[idx] = crowding_distance(F[idx])
    return rank, crowd, fronts
