"""Run history bookkeeping, state features and rewards."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.distance import pdist

from ..metrics import RunningExtrema, normalized_delta

N_FEATURES = 8
RECENT_WINDOW = 5
REWARD_KINDS = ("igd", "binary", "hv")


def mean_pairwise_distance(P) -> float:
    """Mean Euclidean distance over all unordered pairs of rows (0 for one row)."""
    P = np.atleast_2d(np.asarray(P, dtype=np.float64))
    return float(pdist(P).mean()) if len(P) > 1 else 0.0


@dataclass
class RunHistory:
    """Everything the state features and rewards are computed from.

    Call :meth:`start` with the initial measurements, then :meth:`record_step`
    once per completed step.
    """

    t_max: int
    n_models: int = 5
    actions: list[int] = field(default_factory=list)
    igd: list[float] = field(default_factory=list)
    hv: list[float] = field(default_factory=list)
    dx: list[float] = field(default_factory=list)
    df: list[float] = field(default_factory=list)

    def __post_init__(self):
        self.model_igd: list[list[float]] = [[] for _ in range(self.n_models)]
        self.model_mse: list[list[float]] = [[] for _ in range(self.n_models)]
        self.counts = np.zeros(self.n_models, dtype=np.int64)
        self.igd_ext = RunningExtrema()
        self.hv_ext = RunningExtrema()
        self.dx_delta_ext = RunningExtrema()
        self.df_delta_ext = RunningExtrema()
        self.model_igd_ext = [RunningExtrema() for _ in range(self.n_models)]
        self.mse_ext = [RunningExtrema() for _ in range(self.n_models)]

    @property
    def t(self) -> int:
        return len(self.actions)

    def start(self, igd0: float, hv0: float, dx0: float, df0: float) -> None:
        if self.igd:
            raise RuntimeError("history already started")
        self.igd.append(float(igd0))
        self.hv.append(float(hv0))
        self.dx.append(float(dx0))
        self.df.append(float(df0))
        self.igd_ext.update(igd0)
        self.hv_ext.update(hv0)

    def record_step(self, action: int, igd: float, hv: float, dx: float, df: float, mse: float) -> None:
        """Log one completed step: the chosen model, its fit error and the outcome."""
        if not self.igd:
            raise RuntimeError("call start() before record_step()")
        a = int(action)
        self.actions.append(a)
        self.counts[a] += 1
        self.igd.append(float(igd))
        self.hv.append(float(hv))
        self.igd_ext.update(igd)
        self.hv_ext.update(hv)
        self.dx_delta_ext.update(self.dx[-1] - dx)
        self.df_delta_ext.update(self.df[-1] - df)
        self.dx.append(float(dx))
        self.df.append(float(df))
        self.model_igd[a].append(float(igd))
        self.model_igd_ext[a].update(igd)
        self.model_mse[a].append(float(mse))
        self.mse_ext[a].update(mse)


def _last_pair_delta(series: list[float], ext: RunningExtrema) -> float:
    if len(series) < 2:
        return 0.0
    return normalized_delta(series[-2], series[-1], ext)


def extract_state(h: RunHistory) -> np.ndarray:
    """The ``n_models x 8`` feature matrix for the current step."""
    m = h.n_models
    S = np.zeros((m, N_FEATURES))
    t = h.t
    if t == 0:
        return S
    S[:, 0] = h.counts / t
    recent = h.actions[-min(RECENT_WINDOW, t):]
    S[:, 1] = np.bincount(recent, minlength=m)[:m] / len(recent)
    for i in range(m):
        S[i, 2] = _last_pair_delta(h.model_igd[i], h.model_igd_ext[i])
        S[i, 6] = _last_pair_delta(h.model_mse[i], h.mse_ext[i])
    S[:, 3] = _last_pair_delta(h.igd, h.igd_ext)
    S[:, 4] = _last_pair_delta(h.dx, h.dx_delta_ext)
    S[:, 5] = _last_pair_delta(h.df, h.df_delta_ext)
    S[:, 7] = t / h.t_max
    return S


def compute_reward(kind: str, h: RunHistory) -> float:
    """Normalized IGD or HV improvement of the last step, or its binary sign."""
    if len(h.igd) < 2:
        raise RuntimeError("a reward needs at least one completed step")
    if kind == "igd":
        return normalized_delta(h.igd[-2], h.igd[-1], h.igd_ext)
    if kind == "binary":
        return 1.0 if h.igd[-1] < h.igd[-2] else 0.0
    if kind == "hv":
        return normalized_delta(h.hv[-1], h.hv[-2], h.hv_ext)
    raise ValueError(f"unknown reward kind {kind!r}; expected one of {REWARD_KINDS}")
