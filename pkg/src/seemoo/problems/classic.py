"""Classic bi-objective problems: Omni-test and Kursawe."""

from __future__ import annotations

import numpy as np

from ..dominance import nondominated_mask
from .base import Problem


class OmniTest(Problem):
    name = "OMNITEST"

    def __init__(self, n_var: int = 2, problem_id: int | None = None):
        if n_var < 2:
            raise ValueError("OMNITEST needs at least two variables")
        super().__init__(n_var, 2, 0.0, 6.0, problem_id)

    def _evaluate(self, X):
        return np.column_stack([np.sin(np.pi * X).sum(axis=1), np.cos(np.pi * X).sum(axis=1)])

    def pareto_front(self):
        # every Pareto subset maps onto the same arc: all variables share the
        # fractional offset t in [0, 1/2] past an odd integer
        t = np.linspace(1.0, 1.5, 20_001)
        return self.n_var * np.column_stack([np.sin(np.pi * t), np.cos(np.pi * t)]), "constructed-oracle"


class Kursawe(Problem):
    name = "KURSAWE"

    def __init__(self, n_var: int = 3, problem_id: int | None = None):
        super().__init__(n_var, 2, -5.0, 5.0, problem_id)

    def _evaluate(self, X):
        r = np.sqrt(X[:, :-1] ** 2 + X[:, 1:] ** 2)
        f1 = np.sum(-10.0 * np.exp(-0.2 * r), axis=1)
        f2 = np.sum(np.abs(X) ** 0.8 + 5.0 * np.sin(X**3), axis=1)
        return np.column_stack([f1, f2])

    def pareto_front(self, min_points: int = 2000, seed: int = 7):
        """Non-dominated set of a large sample, densified by local search.

        Uniform sampling alone leaves only a handful of non-dominated points,
        so the survivors are repeatedly perturbed with shrinking Gaussian
        steps and refiltered.
        """
        rng = np.random.default_rng(seed)
        X = rng.uniform(self.xl, self.xu, size=(1_000_000, self.n_var))
        X[0] = 0.0  # f1 attains its minimum at the origin
        F = self.evaluate(X)
        keep = nondominated_mask(F)
        X, F = X[keep], F[keep]
        sigma = 0.5
        for _ in range(60):
            parents = X[rng.integers(0, len(X), size=40_000)]
            Y = np.clip(parents + sigma * rng.standard_normal(parents.shape), self.xl, self.xu)
            X = np.vstack([X, Y])
            F = np.vstack([F, self.evaluate(Y)])
            keep = nondominated_mask(F)
            X, F = X[keep], F[keep]
            _, first = np.unique(F, axis=0, return_index=True)
            X, F = X[first], F[first]
            if len(F) >= min_points and sigma < 1e-3:
                break
            sigma = max(sigma * 0.7, 1e-4)
        return F, "constructed-oracle"
