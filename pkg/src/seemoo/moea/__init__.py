"""Surrogate-assisted NSGA-II building blocks."""

from .archive import DUPLICATE_TOL, Archive, TrainingDatabase, is_duplicate, update_database_and_archive
from .infill import select_infill
from .nsga2 import Population, VariationConfig, evolve_one_generation, make_offspring, survival
from .operators import mutation_delta, polynomial_mutation, sbx_crossover, sbx_from_draws, tournament_select
from .sampling import lhs_sample
from .sorting import crowding_distance, dominance_matrix, fast_nondominated_sort, front_ranks, rank_and_crowding

__all__ = [
    "DUPLICATE_TOL", "Archive", "TrainingDatabase", "is_duplicate", "update_database_and_archive",
    "select_infill", "Population", "VariationConfig", "evolve_one_generation", "make_offspring",
    "survival", "mutation_delta", "polynomial_mutation", "sbx_crossover", "sbx_from_draws",
    "tournament_select", "lhs_sample", "crowding_distance", "dominance_matrix",
    "fast_nondominated_sort", "front_ranks", "rank_and_crowding",
]
