"""Latin hypercube sampling."""

from __future__ import annotations

import numpy as np


def lhs_sample(n: int, xl, xu, rng: np.random.Generator) -> np.ndarray:
    """``n`` points with exactly one per equal-width stratum in every dimension.

    Args:
        n: Number of points, at least 1.
        xl: Lower bounds, shape (d,).
        xu: Upper bounds, shape (d,).
        rng: Source of the stratum permutations and the in-stratum jitter.
    """
    if n < 1:
        raise ValueError("lhs_sample needs n >= 1")
    xl = np.asarray(xl, dtype=np.float64)
    xu = np.asarray(xu, dtype=np.float64)
    d = len(xl)
    strata = np.argsort(rng.random((n, d)), axis=0, kind="stable")
    jitter = rng.random((n, d))
    unit = (strata + jitter) / n
    return xl + unit * (xu - xl)
