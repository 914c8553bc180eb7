"""Training database of true evaluations and the non-dominated archive."""

from __future__ import annotations

import numpy as np

from ..dominance import nondominated_mask

DUPLICATE_TOL = 1e-12


def is_duplicate(x: np.ndarray, X: np.ndarray, tol: float = DUPLICATE_TOL) -> bool:
    if len(X) == 0:
        return False
    return bool(np.any(np.all(np.abs(X - x) <= tol, axis=1)))


class TrainingDatabase:
    """Rows of (decision vector, true objectives) in insertion order, without duplicates."""

    def __init__(self, n_var: int, n_obj: int):
        self.X = np.empty((0, n_var))
        self.F = np.empty((0, n_obj))

    def __len__(self) -> int:
        return len(self.X)

    def contains(self, x, tol: float = DUPLICATE_TOL) -> bool:
        return is_duplicate(np.asarray(x, dtype=np.float64), self.X, tol)

    def add(self, X, F) -> np.ndarray:
        """Append new rows; returns the mask of rows actually added."""
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        F = np.atleast_2d(np.asarray(F, dtype=np.float64))
        added = np.zeros(len(X), dtype=bool)
        rows = []
        for i, x in enumerate(X):
            seen = self.X if not rows else np.vstack([self.X, X[rows]])
            if not is_duplicate(x, seen):
                rows.append(i)
                added[i] = True
        if rows:
            self.X = np.vstack([self.X, X[rows]])
            self.F = np.vstack([self.F, F[rows]])
        return added


class Archive:
    """Global non-dominated set of all truly evaluated solutions."""

    def __init__(self, n_var: int, n_obj: int):
        self.X = np.empty((0, n_var))
        self.F = np.empty((0, n_obj))

    def __len__(self) -> int:
        return len(self.X)

    def update(self, X, F) -> "Archive":
        X = np.vstack([self.X, np.atleast_2d(X)])
        F = np.vstack([self.F, np.atleast_2d(F)])
        keep = nondominated_mask(F)
        self.X, self.F = X[keep], F[keep]
        return self


def update_database_and_archive(db: TrainingDatabase, archive: Archive, X_opt, F_opt):
    """Add true evaluations to the database and refresh the archive."""
    added = db.add(X_opt, F_opt)
    X_opt = np.atleast_2d(X_opt)[added]
    F_opt = np.atleast_2d(F_opt)[added]
    if len(X_opt):
        archive.update(X_opt, F_opt)
    return db, archive
