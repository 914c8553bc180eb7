"""Benchmark problems and their reference fronts."""

from .base import DomainError, Problem
from .classic import Kursawe, OmniTest
from .dtlz import DTLZ1, DTLZ2, DTLZ3, DTLZ4, DTLZ5, DTLZ6, DTLZ7, simplex_lattice
from .fronts import (
    FRONT_SIZE,
    ReferenceFront,
    build_front,
    farthest_point_sample,
    read_front,
    reference_front,
    write_front,
)
from .registry import (
    SETTING_A_TEST,
    SUITE,
    SUITE_IDS,
    SuiteEntry,
    make_problem,
    parse_problem_spec,
    split_setting,
    suite_entry,
)
from .wfg import WFG, WFG1, WFG2, WFG3, WFG4, WFG5, WFG6, WFG7, WFG8, WFG9
from .zdt import ZDT1, ZDT2, ZDT3, ZDT4, ZDT5, ZDT6

__all__ = [
    "DomainError", "Problem", "Kursawe", "OmniTest",
    "DTLZ1", "DTLZ2", "DTLZ3", "DTLZ4", "DTLZ5", "DTLZ6", "DTLZ7", "simplex_lattice",
    "FRONT_SIZE", "ReferenceFront", "build_front", "farthest_point_sample",
    "read_front", "reference_front", "write_front",
    "SETTING_A_TEST", "SUITE", "SUITE_IDS", "SuiteEntry", "make_problem",
    "parse_problem_spec", "split_setting", "suite_entry",
    "WFG", "WFG1", "WFG2", "WFG3", "WFG4", "WFG5", "WFG6", "WFG7", "WFG8", "WFG9",
    "ZDT1", "ZDT2", "ZDT3", "ZDT4", "ZDT5", "ZDT6",
]
