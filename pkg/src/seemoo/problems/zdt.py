"""ZDT bi-objective test problems."""

from __future__ import annotations

import numpy as np

from ..dominance import nondominated
from .base import Problem

_DENSE = 20_001


class ZDT(Problem):
    def __init__(self, n_var: int = 30, problem_id: int | None = None):
        super().__init__(n_var, 2, 0.0, 1.0, problem_id)

    def _g(self, X):
        return 1.0 + 9.0 * X[:, 1:].sum(axis=1) / (self.n_var - 1)


class ZDT1(ZDT):
    name = "ZDT1"

    def _evaluate(self, X):
        f1 = X[:, 0]
        g = self._g(X)
        return np.column_stack([f1, g * (1.0 - np.sqrt(f1 / g))])

    def pareto_front(self):
        f1 = np.linspace(0.0, 1.0, _DENSE)
        return np.column_stack([f1, 1.0 - np.sqrt(f1)]), "analytic"


class ZDT2(ZDT):
    name = "ZDT2"

    def _evaluate(self, X):
        f1 = X[:, 0]
        g = self._g(X)
        return np.column_stack([f1, g * (1.0 - (f1 / g) ** 2)])

    def pareto_front(self):
        f1 = np.linspace(0.0, 1.0, _DENSE)
        return np.column_stack([f1, 1.0 - f1**2]), "analytic"


class ZDT3(ZDT):
    name = "ZDT3"

    def _evaluate(self, X):
        f1 = X[:, 0]
        g = self._g(X)
        h = 1.0 - np.sqrt(f1 / g) - (f1 / g) * np.sin(10.0 * np.pi * f1)
        return np.column_stack([f1, g * h])

    def pareto_front(self):
        f1 = np.linspace(0.0, 1.0, 200_001)
        F = np.column_stack([f1, 1.0 - np.sqrt(f1) - f1 * np.sin(10.0 * np.pi * f1)])
        return nondominated(F), "analytic"


class ZDT4(ZDT):
    name = "ZDT4"

    def __init__(self, n_var: int = 10, problem_id: int | None = None):
        xl = np.full(n_var, -5.0)
        xu = np.full(n_var, 5.0)
        xl[0], xu[0] = 0.0, 1.0
        Problem.__init__(self, n_var, 2, xl, xu, problem_id)

    def _evaluate(self, X):
        f1 = X[:, 0]
        rest = X[:, 1:]
        g = 1.0 + 10.0 * (self.n_var - 1) + np.sum(rest**2 - 10.0 * np.cos(4.0 * np.pi * rest), axis=1)
        return np.column_stack([f1, g * (1.0 - np.sqrt(f1 / g))])

    def pareto_front(self):
        f1 = np.linspace(0.0, 1.0, _DENSE)
        return np.column_stack([f1, 1.0 - np.sqrt(f1)]), "analytic"


class ZDT5(ZDT):
    """Binary ZDT5 on a continuous genotype: each gene is the bit ``x > 0.5``.

    Layout: one 30-bit block followed by ``m - 1`` blocks of 5 bits. Both
    objectives are normalized to [0, 1] over their attainable ranges.
    """

    name = "ZDT5"

    def __init__(self, n_var: int = 80, problem_id: int | None = None):
        if n_var < 35 or (n_var - 30) % 5:
            raise ValueError("ZDT5 needs n_var = 30 + 5 * (m - 1) with m >= 2")
        self.m = (n_var - 30) // 5 + 1
        super().__init__(n_var, problem_id)

    def _evaluate(self, X):
        bits = (X > 0.5).astype(np.float64)
        u0 = bits[:, :30].sum(axis=1)
        u = bits[:, 30:].reshape(len(X), self.m - 1, 5).sum(axis=2)
        v = np.where(u < 5, 2.0 + u, 1.0)
        g = v.sum(axis=1)
        f1 = 1.0 + u0
        f2 = g / f1
        lo2 = (self.m - 1) / 31.0
        hi2 = float(self.m - 1)
        return np.column_stack([(f1 - 1.0) / 30.0, (f2 - lo2) / (hi2 - lo2)])

    def pareto_front(self):
        x = 1.0 + np.linspace(0.0, 1.0, _DENSE) * 30.0
        f2 = (self.m - 1) / x
        lo2 = (self.m - 1) / 31.0
        hi2 = float(self.m - 1)
        return np.column_stack([(x - 1.0) / 30.0, (f2 - lo2) / (hi2 - lo2)]), "analytic"


class ZDT6(ZDT):
    name = "ZDT6"

    def __init__(self, n_var: int = 10, problem_id: int | None = None):
        super().__init__(n_var, problem_id)

    def _evaluate(self, X):
        x1 = X[:, 0]
        f1 = 1.0 - np.exp(-4.0 * x1) * np.sin(6.0 * np.pi * x1) ** 6
        g = 1.0 + 9.0 * (X[:, 1:].sum(axis=1) / (self.n_var - 1)) ** 0.25
        return np.column_stack([f1, g * (1.0 - (f1 / g) ** 2)])

    def pareto_front(self):
        x1 = np.linspace(0.0, 1.0, 200_001)
        f1 = 1.0 - np.exp(-4.0 * x1) * np.sin(6.0 * np.pi * x1) ** 6
        F = np.column_stack([f1, 1.0 - f1**2])
        return nondominated(F), "analytic"
