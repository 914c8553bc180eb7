"""Choosing the batch of candidates for true evaluation."""

from __future__ import annotations

import numpy as np

from .archive import TrainingDatabase, is_duplicate
from .nsga2 import Population
from .sampling import lhs_sample


def select_infill(pop: Population, b: int, db: TrainingDatabase, xl, xu, rng: np.random.Generator) -> np.ndarray:
    """Up to ``b`` novel candidates, best front first and most isolated first.

    Candidates already in the database, or already chosen, are skipped.
    Fronts are visited in order; if the population runs out the remainder is
    filled with fresh Latin hypercube samples.
    """
    if b < 1:
        raise ValueError("infill batch size must be positive")
    order = np.lexsort((-pop.crowding, pop.rank))
    chosen: list[np.ndarray] = []
    for i in order:
        if len(chosen) == b:
            break
        x = pop.X[i]
        if db.contains(x) or (chosen and is_duplicate(x, np.asarray(chosen))):
            continue
        chosen.append(x)
    if len(chosen) < b:
        chosen.extend(lhs_sample(b - len(chosen), xl, xu, rng))
    return np.asarray(chosen)
