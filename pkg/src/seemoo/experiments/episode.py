"""One optimization episode: the bi-level loop of scheduler and NSGA-II."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .. import metrics
from ..moea import (
    Archive,
    Population,
    TrainingDatabase,
    evolve_one_generation,
    lhs_sample,
    select_infill,
    update_database_and_archive,
)
from ..problems import Problem, reference_front
from ..scheduler import RunHistory, Transition, compute_reward, extract_state, select_action
from ..scheduler.dqn import DQNAgent
from ..scheduler.state import mean_pairwise_distance
from ..surrogates import SurrogateKind, fit_surrogate
from ..surrogates.base import N_KINDS
from .traces import TraceRow

log = logging.getLogger(__name__)

# which named stream feeds each model's internal randomness
_MODEL_STREAM = {
    SurrogateKind.GP: "gp",
    SurrogateKind.MLP1: "mlp-init",
    SurrogateKind.MLP2: "mlp-init",
    SurrogateKind.KNN: "mlp-init",  # unused by KNN
    SurrogateKind.RBFN: "kmeans",
}


class EpisodeAborted(RuntimeError):
    """A non-finite quantity or failed fit ended the episode early."""


class Policy:
    name = "policy"

    def choose(self, state: np.ndarray, rng: np.random.Generator, global_step: int) -> tuple[int, float]:
        raise NotImplementedError


class FixedPolicy(Policy):
    """Always the same model."""

    def __init__(self, kind):
        self.kind = SurrogateKind(kind)
        self.name = f"fixed-{self.kind.label}"

    def choose(self, state, rng, global_step):
        return int(self.kind), 0.0


class RandomPolicy(Policy):
    """Uniform choice among enabled models."""

    name = "random"

    def __init__(self, enabled=None):
        self.enabled = np.ones(N_KINDS, bool) if enabled is None else np.asarray(enabled, bool)

    def choose(self, state, rng, global_step):
        return select_action(np.zeros(N_KINDS), 1.0, rng, self.enabled), 1.0


class AgentPolicy(Policy):
    """Epsilon-greedy over the agent's Q-values."""

    name = "seemoo"

    def __init__(self, agent: DQNAgent, epsilon: Callable[[int], float]):
        self.agent = agent
        self.epsilon = epsilon

    def choose(self, state, rng, global_step):
        eps = float(self.epsilon(global_step))
        q = self.agent.q_values(state)
        return select_action(q, eps, rng, self.agent.enabled), eps


@dataclass
class EpisodeSettings:
    pop_size: int = 50
    infill_size: int = 5
    t_max: int = 100
    reward: str = "igd"
    track_hv: bool = True
    wall_time: bool = False
    fronts_dir: str | None = None


@dataclass
class StepRecord:
    """What an observer sees after every completed step."""

    t: int
    state: np.ndarray
    action: int
    reward: float
    next_state: np.ndarray
    db: TrainingDatabase
    archive: Archive
    fe: int
    history: RunHistory


@dataclass
class EpisodeResult:
    rows: list[TraceRow] = field(default_factory=list)
    final_igd: float = float("nan")
    fe: int = 0
    archive: Archive | None = None
    history: RunHistory | None = None
    initial_state: np.ndarray | None = None
    aborted: bool = False
    losses: list[float] = field(default_factory=list)


def _check_finite(name: str, value) -> None:
    if not np.all(np.isfinite(value)):
        raise EpisodeAborted(f"non-finite {name}")


def run_episode(
    problem: Problem,
    policy: Policy,
    streams: dict[str, np.random.Generator],
    settings: EpisodeSettings,
    *,
    learner: DQNAgent | None = None,
    replay_rng: np.random.Generator | None = None,
    global_step: int = 0,
    observer: Callable[[StepRecord], None] | None = None,
) -> EpisodeResult:
    """Run ``t_max`` scheduling steps on ``problem``.

    Args:
        policy: Chooses a model index from the current state.
        streams: Named generators from :func:`episode_streams`.
        learner: When given, transitions are stored and the agent is trained.
        global_step: Offset for the epsilon schedule.
        observer: Called with a :class:`StepRecord` after each step.
    """
    s = settings
    xl, xu = problem.xl, problem.xu
    front = reference_front(problem, s.fronts_dir)
    hv_ref = metrics.hv_reference_point(front.points)
    hv_lower = front.points.min(axis=0)

    def hv_of(F):
        return metrics.hypervolume(F, hv_ref, lower=hv_lower) if s.track_hv else float("nan")

    X0 = lhs_sample(s.pop_size, xl, xu, streams["lhs"])
    F0 = problem.evaluate(X0)
    fe = len(X0)
    db = TrainingDatabase(problem.n_var, problem.n_obj)
    archive = Archive(problem.n_var, problem.n_obj)
    update_database_and_archive(db, archive, X0, F0)
    pop = Population.ranked(X0, F0)

    history = RunHistory(t_max=s.t_max, n_models=N_KINDS)
    history.start(metrics.igd(front, archive.F), hv_of(archive.F),
                  mean_pairwise_distance(pop.X), mean_pairwise_distance(pop.F))
    state = extract_state(history)
    result = EpisodeResult(history=history, initial_state=state.copy())
    last_mse = np.full(N_KINDS, np.nan)

    try:
        for t in range(s.t_max):
            tic = time.perf_counter()
            action, eps = policy.choose(state, streams["epsilon"], global_step + t)
            kind = SurrogateKind(action)
            try:
                model = fit_surrogate(kind, db.X, db.F, streams[_MODEL_STREAM[kind]])
            except np.linalg.LinAlgError as exc:
                raise EpisodeAborted(f"{kind.name} fit failed: {exc}") from exc
            _check_finite("training error", model.train_mse)
            last_mse[action] = model.train_mse

            pop = Population.ranked(pop.X, model.predict(pop.X))
            _check_finite("predictions", pop.F)
            pop = evolve_one_generation(pop, model.predict, xl, xu, streams["variation"])
            _check_finite("predictions", pop.F)

            X_opt = select_infill(pop, s.infill_size, db, xl, xu, streams["lhs"])
            F_opt = problem.evaluate(X_opt)
            fe += len(X_opt)
            _check_finite("objectives", F_opt)
            update_database_and_archive(db, archive, X_opt, F_opt)

            igd_t = metrics.igd(front, archive.F)
            hv_t = hv_of(archive.F)
            history.record_step(action, igd_t, hv_t, mean_pairwise_distance(pop.X),
                                mean_pairwise_distance(pop.F), model.train_mse)
            reward = compute_reward(s.reward, history)
            next_state = extract_state(history)
            terminal = t == s.t_max - 1

            if learner is not None:
                loss = learner.observe(
                    Transition(state, action, reward, next_state, terminal), replay_rng
                )
                if loss is not None:
                    result.losses.append(loss)
            if observer is not None:
                observer(StepRecord(t + 1, state, action, reward, next_state, db, archive, fe, history))

            ms = (time.perf_counter() - tic) * 1e3 if s.wall_time else 0.0
            result.rows.append(TraceRow(t + 1, fe, action, reward, igd_t, hv_t, eps, *last_mse.tolist(), ms))
            state = next_state
    except EpisodeAborted as exc:
        log.warning("episode on %s aborted: %s", problem.label, exc)
        result.aborted = True

    result.fe = fe
    result.archive = archive
    result.final_igd = history.igd[-1]
    return result
