"""Quality indicators and the running min-max normalization helper."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.spatial import cKDTree
from scipy.stats import qmc

from .dominance import nondominated_mask

MC_SAMPLES = 2**17  # scrambled Sobol needs a power of two; >= 1e5
MC_SEED = 12345


def igd(front, approx) -> float:
    """Mean distance from each reference point to its nearest approximation point.

    Args:
        front: Reference points, shape (n, m), or a ``ReferenceFront``.
        approx: Approximation set, shape (k, m).

    Raises:
        ValueError: ``approx`` is empty or dimensions disagree.
    """
    ref = np.asarray(getattr(front, "points", front), dtype=np.float64)
    A = np.atleast_2d(np.asarray(approx, dtype=np.float64))
    if A.size == 0:
        raise ValueError("igd needs a non-empty approximation set")
    if A.shape[1] != ref.shape[1]:
        raise ValueError(f"dimension mismatch: front has {ref.shape[1]}, approx has {A.shape[1]}")
    dist, _ = cKDTree(A).query(ref, k=1)
    return float(np.mean(dist))


def hv_reference_point(front, margin: float = 0.1) -> np.ndarray:
    """Componentwise max of the front pushed outward by ``margin`` of its magnitude.

    For non-negative maxima this is ``max * (1 + margin)``. The magnitude form
    keeps the point beyond the front when a maximum is negative or zero.
    """
    P = np.asarray(getattr(front, "points", front), dtype=np.float64)
    top = P.max(axis=0)
    return top + margin * np.abs(top)


def hypervolume(points, ref_point, *, mc_samples: int = MC_SAMPLES, seed: int = MC_SEED, lower=None) -> float:
    """Dominated hypervolume (minimization) bounded by ``ref_point``.

    Exact for up to three objectives. Four or more objectives use a seeded
    scrambled-Sobol Monte Carlo estimate inside the box ``[lower, ref_point]``,
    where ``lower`` defaults to the componentwise minimum of the contributing
    points.
    Points not strictly below ``ref_point`` in every coordinate are ignored.
    """
    r = np.asarray(ref_point, dtype=np.float64)
    P = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if P.size == 0:
        return 0.0
    P = P[np.all(P < r, axis=1)]
    if len(P) == 0:
        return 0.0
    P = np.unique(P[nondominated_mask(P)], axis=0)
    m = P.shape[1]
    if m == 1:
        return float(r[0] - P[:, 0].min())
    if m == 2:
        return _hv2d(P, r)
    if m == 3:
        return _hv3d(P, r)
    return _hv_monte_carlo(P, r, mc_samples, seed, lower)


def _hv2d(P: np.ndarray, r: np.ndarray) -> float:
    P = P[np.argsort(P[:, 0], kind="stable")]
    # sorted non-dominated set: f2 strictly decreasing
    widths = np.diff(np.append(P[:, 0], r[0]))
    return float(np.sum(widths * (r[1] - P[:, 1])))


def _hv3d(P: np.ndarray, r: np.ndarray) -> float:
    # slice along f3: between consecutive levels the cross-section is a 2-D HV
    P = P[np.argsort(P[:, 2], kind="stable")]
    levels = np.append(P[:, 2], r[2])
    total = 0.0
    for i in range(len(P)):
        depth = levels[i + 1] - levels[i]
        if depth <= 0.0:
            continue
        active = P[: i + 1, :2]
        active = active[nondominated_mask(active)]
        total += depth * _hv2d(np.unique(active, axis=0), r[:2])
    return float(total)


@lru_cache(maxsize=8)
def _unit_samples(m: int, n_samples: int, seed: int) -> np.ndarray:
    n = 1 << max(0, int(n_samples - 1).bit_length())
    S = qmc.Sobol(m, scramble=True, seed=seed).random(n)
    S.setflags(write=False)
    return S


def _hv_monte_carlo(P, r, n_samples, seed, lower) -> float:
    lo = P.min(axis=0) if lower is None else np.minimum(np.asarray(lower, dtype=np.float64), P.min(axis=0))
    volume = float(np.prod(r - lo))
    U = _unit_samples(len(r), n_samples, seed)
    cols = [lo[j] + U[:, j] * (r[j] - lo[j]) for j in range(len(r))]
    # biggest boxes first; each point is tested only on samples still uncovered,
    # one coordinate at a time
    P = P[np.argsort(-np.prod(r - P, axis=1), kind="stable")]
    alive = np.arange(len(U))
    covered = np.zeros(len(U), dtype=bool)
    hits = 0
    for p in P:
        idx = alive[cols[0][alive] >= p[0]]
        for j in range(1, len(r)):
            if not len(idx):
                break
            idx = idx[cols[j][idx] >= p[j]]
        if len(idx):
            hits += len(idx)
            covered[idx] = True
            alive = alive[~covered[alive]]
            if not len(alive):
                break
    return volume * hits / len(U)


@dataclass
class RunningExtrema:
    """Running max and min of an observed scalar sequence."""

    max: float = -np.inf
    min: float = np.inf
    count: int = 0

    def update(self, *values: float) -> "RunningExtrema":
        for v in values:
            v = float(v)
            if not np.isfinite(v):
                continue
            self.max = max(self.max, v)
            self.min = min(self.min, v)
            self.count += 1
        return self

    @property
    def span(self) -> float:
        return self.max - self.min if self.count else 0.0


def normalized_delta(prev: float, curr: float, extrema: RunningExtrema, tol: float = 1e-12) -> float:
    """``(prev - curr) / (max - min)`` clamped to [-1, 1]; 0 for a degenerate span."""
    span = extrema.span
    if span < tol:
        return 0.0
    return float(np.clip((prev - curr) / span, -1.0, 1.0))
