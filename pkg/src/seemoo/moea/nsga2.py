"""One surrogate-guided NSGA-II generation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import polynomial_mutation, sbx_crossover, tournament_select
from .sorting import rank_and_crowding


@dataclass
class VariationConfig:
    eta_c: float = 15.0
    prob_crossover: float = 0.9
    prob_var: float = 0.5
    eta_m: float = 20.0
    prob_mutation: float | None = None  # None means 1 / n_var


@dataclass
class Population:
    X: np.ndarray
    F: np.ndarray
    rank: np.ndarray
    crowding: np.ndarray

    @classmethod
    def ranked(cls, X, F) -> "Population":
        rank, crowd, _ = rank_and_crowding(F)
        return cls(np.asarray(X, dtype=np.float64), np.asarray(F, dtype=np.float64), rank, crowd)

    def __len__(self) -> int:
        return len(self.X)


def make_offspring(pop: Population, xl, xu, rng: np.random.Generator, cfg: VariationConfig | None = None) -> np.ndarray:
    cfg = cfg or VariationConfig()
    n, d = pop.X.shape
    n_pairs = (n + 1) // 2
    parents = tournament_select(pop.rank, pop.crowding, 2 * n_pairs, rng)
    p1 = pop.X[parents[:n_pairs]]
    p2 = pop.X[parents[n_pairs:]]
    c1, c2 = sbx_crossover(p1, p2, cfg.eta_c, xl, xu, rng, cfg.prob_crossover, cfg.prob_var)
    children = np.vstack([c1, c2])[:n]
    p_m = 1.0 / d if cfg.prob_mutation is None else cfg.prob_mutation
    return polynomial_mutation(children, cfg.eta_m, p_m, xl, xu, rng)


def survival(F: np.ndarray, n_survive: int) -> np.ndarray:
    """Indices of the best ``n_survive`` rows by front, then descending crowding."""
    rank, crowd, fronts = rank_and_crowding(F)
    keep: list[int] = []
    for idx in fronts:
        if len(keep) + len(idx) <= n_survive:
            keep.extend(idx.tolist())
            continue
        order = idx[np.argsort(-crowd[idx], kind="stable")]
        keep.extend(order[: n_survive - len(keep)].tolist())
        break
    return np.asarray(keep, dtype=np.int64)


def evolve_one_generation(pop: Population, predict, xl, xu, rng: np.random.Generator, cfg: VariationConfig | None = None) -> Population:
    """Offspring by tournament, SBX and mutation, then elitist survival on predictions.

    Args:
        pop: Current population with predicted objectives and ranking.
        predict: Callable mapping a decision batch to predicted objectives.

    Returns:
        A ranked population of the same size. No true evaluations are made.
    """
    children = make_offspring(pop, xl, xu, rng, cfg)
    X = np.vstack([pop.X, children])
    F = np.vstack([pop.F, predict(children)])
    keep = survival(F, len(pop))
    return Population.ranked(X[keep], F[keep])
