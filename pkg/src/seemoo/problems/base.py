from __future__ import annotations

import numpy as np


class DomainError(ValueError):
    """Decision vectors outside the box bounds (callers must clip first)."""


class Problem:
    """A box-constrained multi-objective minimization problem.

    Instances are treated as immutable: bounds are stored as read-only
    arrays and ``evaluate`` is a pure function of its input.
    """

    name: str = "problem"

    def __init__(self, n_var: int, n_obj: int, xl, xu, problem_id: int | None = None):
        self.n_var = int(n_var)
        self.n_obj = int(n_obj)
        xl = np.broadcast_to(np.asarray(xl, dtype=np.float64), (self.n_var,)).copy()
        xu = np.broadcast_to(np.asarray(xu, dtype=np.float64), (self.n_var,)).copy()
        if not np.all(xl < xu):
            raise ValueError(f"{self.name}: lower bounds must be below upper bounds")
        xl.flags.writeable = False
        xu.flags.writeable = False
        self.xl = xl
        self.xu = xu
        self.id = problem_id

    @property
    def label(self) -> str:
        """File-safe identifier distinguishing objective counts."""
        return f"{self.name}_m{self.n_obj}"

    def evaluate(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        single = X.ndim == 1
        X = np.atleast_2d(X)
        if X.shape[1] != self.n_var:
            raise ValueError(f"{self.name}: expected {self.n_var} variables, got {X.shape[1]}")
        if len(X) == 0:
            return np.empty((0, self.n_obj))
        if np.any(X < self.xl) or np.any(X > self.xu):
            raise DomainError(f"{self.name}: decision vector outside bounds")
        F = self._evaluate(X.copy())
        return F[0] if single else F

    def _evaluate(self, X: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def pareto_front(self) -> tuple[np.ndarray, str]:
        """Dense sample of the Pareto front and its source tag."""
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n_var={self.n_var}, n_obj={self.n_obj})"
