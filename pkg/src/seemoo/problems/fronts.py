"""Reference Pareto fronts: construction, down-sampling and CSV cache."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..dominance import nondominated_mask
from .base import Problem

FRONT_SIZE = 1000
PACKAGE_FRONTS = Path(__file__).with_name("fronts")
ENV_VAR = "SEEMOO_FRONTS_DIR"


@dataclass(frozen=True)
class ReferenceFront:
    points: np.ndarray
    source: str
    problem: str = ""

    def __len__(self) -> int:
        return len(self.points)


def farthest_point_sample(F: np.ndarray, n: int) -> np.ndarray:
    """Greedy max-min subset of ``n`` rows, starting at the row with minimal f1.

    The result is deterministic: ties go to the lowest index.
    """
    F = np.asarray(F, dtype=np.float64)
    if len(F) <= n:
        return F.copy()
    chosen = np.empty(n, dtype=np.int64)
    chosen[0] = int(np.argmin(F[:, 0]))
    dist = np.linalg.norm(F - F[chosen[0]], axis=1)
    for i in range(1, n):
        chosen[i] = int(np.argmax(dist))
        np.minimum(dist, np.linalg.norm(F - F[chosen[i]], axis=1), out=dist)
    return F[np.sort(chosen)]


def build_front(problem: Problem, size: int = FRONT_SIZE) -> ReferenceFront:
    points, source = problem.pareto_front()
    points = np.asarray(points, dtype=np.float64)
    points = points[np.all(np.isfinite(points), axis=1)]
    points = np.unique(points, axis=0)
    points = points[nondominated_mask(points)]
    return ReferenceFront(farthest_point_sample(points, size), source, problem.label)


def front_path(problem: Problem, data_dir: str | os.PathLike | None = None) -> Path:
    return Path(data_dir) / f"{problem.label}.csv" if data_dir is not None else _default_dir() / f"{problem.label}.csv"


def _default_dir() -> Path:
    return Path(os.environ.get(ENV_VAR, PACKAGE_FRONTS))


def write_front(path: str | os.PathLike, front: ReferenceFront) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    m = front.points.shape[1]
    header = f"problem={front.problem} n_obj={m} source={front.source}"
    np.savetxt(path, front.points, fmt="%.17g", delimiter=",", header=header, comments="# ")


def read_front(path: str | os.PathLike) -> ReferenceFront:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        first = fh.readline()
    if not first.startswith("#"):
        raise ValueError(f"{path}: missing front header")
    meta = dict(tok.split("=", 1) for tok in first[1:].split() if "=" in tok)
    points = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
    if points.shape[1] != int(meta["n_obj"]):
        raise ValueError(f"{path}: header n_obj does not match the data")
    return ReferenceFront(points, meta.get("source", "unknown"), meta.get("problem", ""))


_MEMO: dict[tuple[str, str], ReferenceFront] = {}


def reference_front(problem: Problem, data_dir: str | os.PathLike | None = None) -> ReferenceFront:
    """Load the cached front for ``problem``, building and caching it if absent.

    Files are looked up in ``data_dir``, then ``$SEEMOO_FRONTS_DIR``, then the
    copies shipped with the package.
    """
    path = front_path(problem, data_dir)
    key = (problem.label, str(path))
    if key in _MEMO:
        return _MEMO[key]
    if not path.exists() and data_dir is None and (PACKAGE_FRONTS / path.name).exists():
        path = PACKAGE_FRONTS / path.name
    if path.exists():
        front = read_front(path)
    else:
        front = build_front(problem)
        try:
            write_front(path, front)
        except OSError:
            pass  # read-only location: keep the in-memory copy
    _MEMO[key] = front
    return front
