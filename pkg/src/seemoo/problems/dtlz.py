"""DTLZ scalable test problems."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from ..dominance import nondominated
from .base import Problem


def simplex_lattice(n_obj: int, n_partitions: int) -> np.ndarray:
    """All points of the unit simplex with coordinates in multiples of 1/H."""
    # stars and bars: choose positions of the n_obj - 1 separators
    rows = []
    for bars in combinations(range(n_partitions + n_obj - 1), n_obj - 1):
        edges = (-1, *bars, n_partitions + n_obj - 1)
        rows.append([edges[i + 1] - edges[i] - 1 for i in range(n_obj)])
    return np.asarray(rows, dtype=np.float64) / n_partitions


def _lattice_at_least(n_obj: int, n_points: int) -> np.ndarray:
    h = 1
    while True:
        W = simplex_lattice(n_obj, h)
        if len(W) >= n_points:
            return W
        h += 1


class DTLZ(Problem):
    def __init__(self, n_var: int, n_obj: int, problem_id: int | None = None):
        if n_var < n_obj:
            raise ValueError("DTLZ needs n_var >= n_obj")
        super().__init__(n_var, n_obj, 0.0, 1.0, problem_id)
        self.k = n_var - n_obj + 1

    def _split(self, X):
        return X[:, : self.n_obj - 1], X[:, self.n_obj - 1 :]

    def _g_rastrigin(self, XM):
        return 100.0 * (self.k + np.sum((XM - 0.5) ** 2 - np.cos(20.0 * np.pi * (XM - 0.5)), axis=1))

    @staticmethod
    def _g_sphere(XM):
        return np.sum((XM - 0.5) ** 2, axis=1)

    def _spherical(self, angles, g):
        # angles in [0, 1], mapped to [0, pi/2]
        M = self.n_obj
        c = np.cos(angles * np.pi / 2.0)
        s = np.sin(angles * np.pi / 2.0)
        F = np.empty((len(g), M))
        for i in range(M):
            f = 1.0 + g
            f = f * np.prod(c[:, : M - 1 - i], axis=1)
            if i > 0:
                f = f * s[:, M - 1 - i]
            F[:, i] = f
        return F

    def _sphere_front(self):
        W = _lattice_at_least(self.n_obj, 2000)
        return W / np.linalg.norm(W, axis=1, keepdims=True), "analytic"


class DTLZ1(DTLZ):
    name = "DTLZ1"

    def _evaluate(self, X):
        XP, XM = self._split(X)
        g = self._g_rastrigin(XM)
        M = self.n_obj
        F = np.empty((len(X), M))
        for i in range(M):
            f = 0.5 * (1.0 + g) * np.prod(XP[:, : M - 1 - i], axis=1)
            if i > 0:
                f = f * (1.0 - XP[:, M - 1 - i])
            F[:, i] = f
        return F

    def pareto_front(self):
        return 0.5 * _lattice_at_least(self.n_obj, 2000), "analytic"


class DTLZ2(DTLZ):
    name = "DTLZ2"

    def _evaluate(self, X):
        XP, XM = self._split(X)
        return self._spherical(XP, self._g_sphere(XM))

    def pareto_front(self):
        return self._sphere_front()


class DTLZ3(DTLZ):
    name = "DTLZ3"

    def _evaluate(self, X):
        XP, XM = self._split(X)
        return self._spherical(XP, self._g_rastrigin(XM))

    def pareto_front(self):
        return self._sphere_front()


class DTLZ4(DTLZ):
    name = "DTLZ4"
    alpha = 100.0

    def _evaluate(self, X):
        XP, XM = self._split(X)
        return self._spherical(XP**self.alpha, self._g_sphere(XM))

    def pareto_front(self):
        return self._sphere_front()


class _DegenerateDTLZ(DTLZ):
    def _g(self, XM):
        raise NotImplementedError

    def _evaluate(self, X):
        XP, XM = self._split(X)
        g = self._g(XM)
        theta = (1.0 + 2.0 * g[:, None] * XP) / (2.0 * (1.0 + g[:, None]))
        theta[:, 0] = XP[:, 0]
        return self._spherical(theta, g)

    def pareto_front(self):
        # g = 0 pins every angle after the first at pi/4
        t = np.linspace(0.0, 1.0, 20_001)
        theta = np.full((len(t), self.n_obj - 1), 0.5)
        theta[:, 0] = t
        return self._spherical(theta, np.zeros(len(t))), "analytic"


class DTLZ5(_DegenerateDTLZ):
    name = "DTLZ5"

    def _g(self, XM):
        return self._g_sphere(XM)


class DTLZ6(_DegenerateDTLZ):
    name = "DTLZ6"

    def _g(self, XM):
        return np.sum(XM**0.1, axis=1)


class DTLZ7(DTLZ):
    name = "DTLZ7"

    def _evaluate(self, X):
        M = self.n_obj
        f = X[:, : M - 1]
        g = 1.0 + 9.0 / self.k * X[:, M - 1 :].sum(axis=1)
        h = M - np.sum(f / (1.0 + g[:, None]) * (1.0 + np.sin(3.0 * np.pi * f)), axis=1)
        return np.column_stack([f, (1.0 + g) * h])

    def pareto_front(self):
        M = self.n_obj
        per_axis = {2: 200_001, 3: 161}.get(M, max(2, int(round(30_000 ** (1.0 / (M - 1))))))
        axes = np.meshgrid(*[np.linspace(0.0, 1.0, per_axis)] * (M - 1), indexing="ij")
        head = np.column_stack([a.ravel() for a in axes])
        last = 2.0 * M - np.sum(head * (1.0 + np.sin(3.0 * np.pi * head)), axis=1)
        return nondominated(np.column_stack([head, last])), "analytic"
