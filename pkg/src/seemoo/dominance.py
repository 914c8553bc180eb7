"""Pareto dominance helpers (minimization)."""

from __future__ import annotations

import numpy as np


def dominates(a, b) -> bool:
    """True when ``a`` is no worse than ``b`` everywhere and better somewhere."""
    a = np.asarray(a)
    b = np.asarray(b)
    return bool(np.all(a <= b) and np.any(a < b))


def nondominated_mask(F, chunk: int = 512) -> np.ndarray:
    """Boolean mask of rows of ``F`` not dominated by any other row."""
    F = np.asarray(F, dtype=np.float64)
    n = len(F)
    keep = np.ones(n, dtype=bool)
    if n <= 1:
        return keep
    if F.shape[1] == 2:
        return _nondominated_mask_2d(F)
    for start in range(0, n, chunk):
        block = F[start : start + chunk]
        le = np.all(F[None, :, :] <= block[:, None, :], axis=2)
        lt = np.any(F[None, :, :] < block[:, None, :], axis=2)
        keep[start : start + chunk] = ~np.any(le & lt, axis=1)
    return keep


def _nondominated_mask_2d(F: np.ndarray) -> np.ndarray:
    # sort by f1 then f2; a point survives if its f2 beats every earlier point
    # with strictly smaller f1 and it is not beaten within its own f1 tie group
    order = np.lexsort((F[:, 1], F[:, 0]))
    keep = np.zeros(len(F), dtype=bool)
    best_f2 = np.inf
    i = 0
    n = len(F)
    while i < n:
        j = i
        f1 = F[order[i], 0]
        while j < n and F[order[j], 0] == f1:
            j += 1
        group = order[i:j]
        group_min = F[group[0], 1]
        if group_min < best_f2:
            keep[group[F[group, 1] == group_min]] = True
            best_f2 = group_min
        i = j
    return keep


def nondominated(F) -> np.ndarray:
    F = np.asarray(F, dtype=np.float64)
    return F[nondominated_mask(F)]
