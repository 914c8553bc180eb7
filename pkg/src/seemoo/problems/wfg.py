"""WFG toolkit problems WFG1-WFG9.

Variable ``i`` (1-based) lives in ``[0, 2i]``. The first ``k`` variables are
position-related and the remaining ``l = n_var - k`` distance-related.
"""

from __future__ import annotations

import numpy as np

from ..dominance import nondominated_mask
from .base import Problem


def _clip01(x, eps: float = 1e-10):
    x = np.asarray(x, dtype=np.float64)
    x = np.where((x < 0) & (x >= -eps), 0.0, x)
    return np.where((x > 1) & (x <= 1 + eps), 1.0, x)


# --- transformations --------------------------------------------------------
def shift_linear(y, A=0.35):
    return _clip01(np.abs(y - A) / np.abs(np.floor(A - y) + A))


def shift_deceptive(y, A=0.35, B=0.001, C=0.05):
    t1 = np.floor(y - A + B) * (1.0 - C + (A - B) / B) / (A - B)
    t2 = np.floor(A + B - y) * (1.0 - C + (1.0 - A - B) / B) / (1.0 - A - B)
    return _clip01(1.0 + (np.abs(y - A) - B) * (t1 + t2 + 1.0 / B))


def shift_multimodal(y, A, B, C):
    t1 = np.abs(y - C) / (2.0 * (np.floor(C - y) + C))
    t2 = (4.0 * A + 2.0) * np.pi * (0.5 - t1)
    return _clip01((1.0 + np.cos(t2) + 4.0 * B * t1**2) / (B + 2.0))


def bias_flat(y, a, b, c):
    out = (
        a
        + np.minimum(0.0, np.floor(y - b)) * a * (b - y) / b
        - np.minimum(0.0, np.floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c)
    )
    return _clip01(out)


def bias_poly(y, alpha):
    return _clip01(y**alpha)


def bias_param(y, y_ref, A=0.98 / 49.98, B=0.02, C=50.0):
    v = A - (1.0 - 2.0 * y_ref) * np.abs(np.floor(0.5 - y_ref) + A)
    return _clip01(y ** (B + (C - B) * v))


def reduce_weighted(y, w):
    return _clip01(y @ w / w.sum())


def reduce_mean(y):
    return _clip01(y.mean(axis=1))


def reduce_nonsep(y, A: int):
    n, m = y.shape
    num = np.zeros(n)
    for j in range(m):
        num += y[:, j]
        for k in range(A - 1):
            num += np.abs(y[:, j] - y[:, (1 + j + k) % m])
    half = np.ceil(A / 2.0)
    return _clip01(num / (m * half * (1.0 + 2.0 * A - 2.0 * half) / A))


# --- shapes -----------------------------------------------------------------
def _shape(x, m, M, f_first, f_last):
    # m is 1-based objective index, x holds M-1 position values
    if m == 1:
        out = np.prod(f_first(x[:, : M - 1]), axis=1)
    elif m < M:
        out = np.prod(f_first(x[:, : M - m]), axis=1) * f_last(x[:, M - m])
    else:
        out = f_last(x[:, 0])
    return _clip01(out)


def shape_linear(x, m, M):
    return _shape(x, m, M, lambda v: v, lambda v: 1.0 - v)


def shape_convex(x, m, M):
    return _shape(
        x, m, M, lambda v: 1.0 - np.cos(v * np.pi / 2), lambda v: 1.0 - np.sin(v * np.pi / 2)
    )


def shape_concave(x, m, M):
    return _shape(x, m, M, lambda v: np.sin(v * np.pi / 2), lambda v: np.cos(v * np.pi / 2))


def shape_mixed(x0, A=5.0, alpha=1.0):
    aux = 2.0 * A * np.pi
    return _clip01((1.0 - x0 - np.cos(aux * x0 + np.pi / 2) / aux) ** alpha)


def shape_disconnected(x0, alpha=1.0, beta=1.0, A=5.0):
    return _clip01(1.0 - x0**alpha * np.cos(A * x0**beta * np.pi) ** 2)


class WFG(Problem):
    def __init__(self, n_var: int, n_obj: int, k: int | None = None, problem_id: int | None = None):
        self.k = int(k) if k is not None else 2 * (n_obj - 1)
        self.l = n_var - self.k
        if n_obj < 2:
            raise ValueError("WFG needs at least two objectives")
        if self.k % (n_obj - 1):
            raise ValueError("position parameter k must be divisible by n_obj - 1")
        if self.l < 1:
            raise ValueError("WFG needs at least one distance parameter")
        super().__init__(n_var, n_obj, 0.0, 2.0 * np.arange(1, n_var + 1), problem_id)
        self.S = 2.0 * np.arange(1, n_obj + 1)
        self.A = np.ones(n_obj - 1)

    # reductions shared by several members
    def _group_reduce(self, y, reducer):
        gap = self.k // (self.n_obj - 1)
        cols = [reducer(y[:, i * gap : (i + 1) * gap], gap) for i in range(self.n_obj - 1)]
        cols.append(reducer(y[:, self.k :], self.l))
        return np.column_stack(cols)

    def _mean_reduce(self, y):
        return self._group_reduce(y, lambda block, _: reduce_mean(block))

    def _nonsep_reduce(self, y):
        return self._group_reduce(y, reduce_nonsep)

    def _post(self, t):
        x = np.empty_like(t)
        last = t[:, -1]
        for i in range(self.n_obj - 1):
            x[:, i] = np.maximum(last, self.A[i]) * (t[:, i] - 0.5) + 0.5
        x[:, -1] = last
        return x

    def _objectives(self, x, h):
        return x[:, -1][:, None] + self.S * h

    def _concave(self, x):
        M = self.n_obj
        return np.column_stack([shape_concave(x[:, :-1], m, M) for m in range(1, M + 1)])

    def _normalize(self, X):
        return X / self.xu

    # Pareto-optimal decision vectors for given position values in [0, 1]
    def optimal_decisions(self, pos: np.ndarray) -> np.ndarray:
        y = np.column_stack([pos, np.full((len(pos), self.l), 0.35)])
        return y * self.xu

    def pareto_front(self):
        rng = np.random.default_rng(20240611 + 100 * self.n_obj + self.k)
        n = 6000
        gap = self.k // (self.n_obj - 1)
        pieces = [
            rng.random((n, self.k)),
            np.repeat(rng.random((n, self.n_obj - 1)), gap, axis=1),
            rng.random((n, self.k)) ** 50.0,
            np.repeat(rng.random((n, self.n_obj - 1)) ** 50.0, gap, axis=1),
            rng.integers(0, 2, size=(n // 4, self.k)).astype(float),
        ]
        pos = np.vstack(pieces)
        F = self.evaluate(np.clip(self.optimal_decisions(pos), self.xl, self.xu))
        F = F[nondominated_mask(F)]
        return np.unique(F, axis=0), "constructed-oracle"


class WFG1(WFG):
    name = "WFG1"

    def _evaluate(self, X):
        y = self._normalize(X)
        k = self.k
        y[:, k:] = shift_linear(y[:, k:], 0.35)
        y[:, k:] = bias_flat(y[:, k:], 0.8, 0.75, 0.85)
        y = bias_poly(y, 0.02)
        w = 2.0 * np.arange(1, self.n_var + 1)
        gap = k // (self.n_obj - 1)
        t = [reduce_weighted(y[:, i * gap : (i + 1) * gap], w[i * gap : (i + 1) * gap]) for i in range(self.n_obj - 1)]
        t.append(reduce_weighted(y[:, k:], w[k:]))
        x = self._post(np.column_stack(t))
        M = self.n_obj
        h = [shape_convex(x[:, :-1], m, M) for m in range(1, M)]
        h.append(shape_mixed(x[:, 0], A=5.0, alpha=1.0))
        return self._objectives(x, np.column_stack(h))

    def pareto_front(self):
        # y**0.02 amplifies the rounding residue of the 0.35 distance values
        # into a visible offset, so subtract it: on the true front x_M = 0
        points, source = super().pareto_front()
        corner = self.evaluate(self.optimal_decisions(np.zeros((1, self.k))))
        return points - corner[0, 0], source


class _WFG2Family(WFG):
    def __init__(self, n_var, n_obj, k=None, problem_id=None):
        super().__init__(n_var, n_obj, k, problem_id)
        if self.l % 2:
            raise ValueError(f"{self.name} needs an even number of distance parameters")

    def _transform(self, X):
        y = self._normalize(X)
        k = self.k
        y[:, k:] = shift_linear(y[:, k:], 0.35)
        pairs = [reduce_nonsep(y[:, k + 2 * i : k + 2 * i + 2], 2) for i in range(self.l // 2)]
        y = np.column_stack([y[:, :k], *pairs])
        gap = k // (self.n_obj - 1)
        t = [reduce_mean(y[:, i * gap : (i + 1) * gap]) for i in range(self.n_obj - 1)]
        t.append(reduce_mean(y[:, k:]))
        return self._post(np.column_stack(t))


class WFG2(_WFG2Family):
    name = "WFG2"

    def _evaluate(self, X):
        x = self._transform(X)
        M = self.n_obj
        h = [shape_convex(x[:, :-1], m, M) for m in range(1, M)]
        h.append(shape_disconnected(x[:, 0], alpha=1.0, beta=1.0, A=5.0))
        return self._objectives(x, np.column_stack(h))


class WFG3(_WFG2Family):
    name = "WFG3"

    def __init__(self, n_var, n_obj, k=None, problem_id=None):
        super().__init__(n_var, n_obj, k, problem_id)
        self.A = np.zeros(n_obj - 1)
        self.A[0] = 1.0

    def _evaluate(self, X):
        x = self._transform(X)
        M = self.n_obj
        h = np.column_stack([shape_linear(x[:, :-1], m, M) for m in range(1, M + 1)])
        return self._objectives(x, h)


class WFG4(WFG):
    name = "WFG4"

    def _evaluate(self, X):
        y = shift_multimodal(self._normalize(X), 30.0, 10.0, 0.35)
        x = self._post(self._mean_reduce(y))
        return self._objectives(x, self._concave(x))


class WFG5(WFG):
    name = "WFG5"

    def _evaluate(self, X):
        y = shift_deceptive(self._normalize(X), 0.35, 0.001, 0.05)
        x = self._post(self._mean_reduce(y))
        return self._objectives(x, self._concave(x))


class WFG6(WFG):
    name = "WFG6"

    def _evaluate(self, X):
        y = self._normalize(X)
        y[:, self.k :] = shift_linear(y[:, self.k :], 0.35)
        x = self._post(self._nonsep_reduce(y))
        return self._objectives(x, self._concave(x))


class WFG7(WFG):
    name = "WFG7"

    def _evaluate(self, X):
        y = self._normalize(X)
        orig = y.copy()
        for i in range(self.k):
            y[:, i] = bias_param(orig[:, i], reduce_mean(orig[:, i + 1 :]))
        y[:, self.k :] = shift_linear(y[:, self.k :], 0.35)
        x = self._post(self._mean_reduce(y))
        return self._objectives(x, self._concave(x))


class WFG8(WFG):
    name = "WFG8"

    def _evaluate(self, X):
        y = self._normalize(X)
        orig = y.copy()
        for i in range(self.k, self.n_var):
            y[:, i] = bias_param(orig[:, i], reduce_mean(orig[:, :i]))
        y[:, self.k :] = shift_linear(y[:, self.k :], 0.35)
        x = self._post(self._mean_reduce(y))
        return self._objectives(x, self._concave(x))

    def optimal_decisions(self, pos):
        # each distance value must undo the bias driven by all earlier variables
        y = np.array(pos, dtype=np.float64)
        A = 0.98 / 49.98
        for _ in range(self.l):
            u = y.mean(axis=1)
            v = A - (1.0 - 2.0 * u) * np.abs(np.floor(0.5 - u) + A)
            exponent = 0.02 + (50.0 - 0.02) * v
            y = np.column_stack([y, 0.35 ** (1.0 / exponent)])
        return y * self.xu


class WFG9(WFG):
    name = "WFG9"

    def _evaluate(self, X):
        y = self._normalize(X)
        orig = y.copy()
        for i in range(self.n_var - 1):
            y[:, i] = bias_param(orig[:, i], reduce_mean(orig[:, i + 1 :]))
        k = self.k
        y[:, :k] = shift_deceptive(y[:, :k], 0.35, 0.001, 0.05)
        y[:, k:] = shift_multimodal(y[:, k:], 30.0, 95.0, 0.35)
        x = self._post(self._nonsep_reduce(y))
        return self._objectives(x, self._concave(x))

    def optimal_decisions(self, pos):
        n = len(pos)
        y = np.zeros((n, self.n_var))
        y[:, : self.k] = pos
        y[:, -1] = 0.35
        for i in range(self.n_var - 2, self.k - 1, -1):
            val = y[:, i + 1 :].mean(axis=1)
            y[:, i] = 0.35 ** (1.0 / (0.02 + 1.96 * val))
        return y * self.xu
