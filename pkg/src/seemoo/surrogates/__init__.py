"""Surrogate model pool: GP, two MLP budgets, KNN and RBFN."""

from .base import (
    N_KINDS,
    InputScaler,
    InsufficientDataError,
    NotFittedError,
    SingularKernelError,
    SurrogateKind,
)
from .gp import GaussianProcess, GPHyperparams, gp_log_marginal_likelihood, lml_and_grad
from .kmeans import KMeansResult, kmeans
from .models import KNNRegressor, MLPRegressor, RBFNetwork
from .pool import SurrogateModel, SurrogateOptions, fit_surrogate, predict, training_mse

__all__ = [
    "N_KINDS", "InputScaler", "InsufficientDataError", "NotFittedError",
    "SingularKernelError", "SurrogateKind", "GaussianProcess", "GPHyperparams",
    "gp_log_marginal_likelihood", "lml_and_grad", "KMeansResult", "kmeans",
    "KNNRegressor", "MLPRegressor", "RBFNetwork", "SurrogateModel",
    "SurrogateOptions", "fit_surrogate", "predict", "training_mse",
]
