"""Variation operators: binary tournament, SBX and polynomial mutation.

Every operator draws its full random arrays up front, so the amount of
randomness consumed depends only on array shapes and never on values.
"""

from __future__ import annotations

import numpy as np


def tournament_select(rank, crowding, n_select: int, rng: np.random.Generator) -> np.ndarray:
    """Binary tournaments: lower rank wins, then larger crowding, then a coin."""
    rank = np.asarray(rank)
    crowding = np.asarray(crowding, dtype=np.float64)
    n = len(rank)
    pairs = rng.integers(0, n, size=(n_select, 2))
    coin = rng.random(n_select) < 0.5
    a, b = pairs[:, 0], pairs[:, 1]
    a_wins = np.where(
        rank[a] != rank[b],
        rank[a] < rank[b],
        np.where(crowding[a] != crowding[b], crowding[a] > crowding[b], coin),
    )
    return np.where(a_wins, a, b)


def sbx_from_draws(p1, p2, u, do_cross, eta_c: float):
    """SBX children from given uniform draws ``u`` and a crossover mask."""
    p1 = np.asarray(p1, dtype=np.float64)
    p2 = np.asarray(p2, dtype=np.float64)
    expo = 1.0 / (eta_c + 1.0)
    beta = np.where(u <= 0.5, (2.0 * u) ** expo, (1.0 / (2.0 * (1.0 - u))) ** expo)
    c1 = 0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2)
    c2 = 0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2)
    return np.where(do_cross, c1, p1), np.where(do_cross, c2, p2)


def sbx_crossover(
    p1,
    p2,
    eta_c: float,
    xl,
    xu,
    rng: np.random.Generator,
    prob: float = 0.9,
    prob_var: float = 0.5,
):
    """Simulated binary crossover on row-aligned parent batches.

    Each pair crosses with probability ``prob``; within a crossing pair each
    variable crosses with probability ``prob_var``. Children are clipped to
    the bounds.
    """
    p1 = np.atleast_2d(np.asarray(p1, dtype=np.float64))
    p2 = np.atleast_2d(np.asarray(p2, dtype=np.float64))
    n, d = p1.shape
    pair = rng.random(n) < prob
    var = rng.random((n, d)) < prob_var
    u = rng.random((n, d))
    mask = pair[:, None] & var & (np.abs(p1 - p2) > 1e-14)
    c1, c2 = sbx_from_draws(p1, p2, u, mask, eta_c)
    return np.clip(c1, xl, xu), np.clip(c2, xl, xu)


def mutation_delta(u, eta_m: float):
    expo = 1.0 / (eta_m + 1.0)
    return np.where(u < 0.5, (2.0 * u) ** expo - 1.0, 1.0 - (2.0 * (1.0 - u)) ** expo)


def polynomial_mutation(X, eta_m: float, p_m: float, xl, xu, rng: np.random.Generator) -> np.ndarray:
    """Polynomial mutation of each variable with probability ``p_m``."""
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    xl = np.asarray(xl, dtype=np.float64)
    xu = np.asarray(xu, dtype=np.float64)
    hit = rng.random(X.shape) < p_m
    u = rng.random(X.shape)
    Y = X + np.where(hit, mutation_delta(u, eta_m) * (xu - xl), 0.0)
    return np.clip(Y, xl, xu)
