"""Benchmark suite table and problem factory."""

from __future__ import annotations

from dataclasses import dataclass

from .base import Problem
from .classic import Kursawe, OmniTest
from .dtlz import DTLZ1, DTLZ2, DTLZ3, DTLZ4, DTLZ5, DTLZ6, DTLZ7
from .wfg import WFG1, WFG2, WFG3, WFG4, WFG5, WFG6, WFG7, WFG8, WFG9
from .zdt import ZDT1, ZDT2, ZDT3, ZDT4, ZDT5, ZDT6


@dataclass(frozen=True)
class SuiteEntry:
    id: int
    name: str
    n_var: int
    n_obj: int


_CLASSES = {
    cls.name: cls
    for cls in (
        OmniTest, Kursawe, ZDT1, ZDT2, ZDT3, ZDT4, ZDT5, ZDT6,
        DTLZ1, DTLZ2, DTLZ3, DTLZ4, DTLZ5, DTLZ6, DTLZ7,
        WFG1, WFG2, WFG3, WFG4, WFG5, WFG6, WFG7, WFG8, WFG9,
    )
}

_ROWS = [
    ("OMNITEST", 2, 2), ("KURSAWE", 3, 2),
    ("ZDT1", 30, 2), ("ZDT2", 30, 2), ("ZDT3", 30, 2), ("ZDT4", 10, 2), ("ZDT5", 80, 2), ("ZDT6", 10, 2),
    ("DTLZ1", 10, 5), ("DTLZ2", 10, 5), ("DTLZ3", 10, 5), ("DTLZ4", 10, 5),
    ("DTLZ5", 30, 3), ("DTLZ6", 30, 3), ("DTLZ7", 30, 3),
    ("WFG1", 10, 3), ("WFG2", 10, 3), ("WFG3", 10, 3),
    ("WFG4", 10, 5), ("WFG5", 30, 5), ("WFG6", 30, 5), ("WFG7", 30, 5), ("WFG8", 30, 5), ("WFG9", 30, 5),
]

SUITE: tuple[SuiteEntry, ...] = tuple(SuiteEntry(i + 1, *row) for i, row in enumerate(_ROWS))
SUITE_IDS: tuple[int, ...] = tuple(e.id for e in SUITE)

# held-out problems of the default train/test split
SETTING_A_TEST: tuple[int, ...] = (3, 7, 10, 13, 16, 23)


def split_setting(setting: str) -> tuple[list[int], list[int]]:
    """Return ``(train_ids, test_ids)`` for split ``"A"`` or its reverse ``"B"``."""
    test_a = sorted(SETTING_A_TEST)
    train_a = [i for i in SUITE_IDS if i not in SETTING_A_TEST]
    key = setting.upper()
    if key == "A":
        return train_a, test_a
    if key == "B":
        return test_a, train_a
    raise ValueError(f"unknown setting {setting!r}, expected 'A' or 'B'")


def suite_entry(key: int | str) -> SuiteEntry:
    if isinstance(key, str) and not key.strip().isdigit():
        name = key.strip().upper()
        for e in SUITE:
            if e.name == name:
                return e
        raise LookupError(f"unknown problem {key!r}")
    idx = int(key)
    if not 1 <= idx <= len(SUITE):
        raise LookupError(f"unknown problem id {idx}")
    return SUITE[idx - 1]


def parse_problem_spec(spec: str) -> tuple[str, dict[str, int]]:
    """Split ``"DTLZ2:n_var=10,n_obj=3"`` into a name and integer overrides."""
    name, _, rest = spec.partition(":")
    overrides: dict[str, int] = {}
    for item in filter(None, (p.strip() for p in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep or key.strip() not in ("n_var", "n_obj", "k"):
            raise ValueError(f"bad problem override {item!r} in {spec!r}")
        overrides[key.strip()] = int(value)
    return name.strip(), overrides


def make_problem(key: int | str, n_var: int | None = None, n_obj: int | None = None, **kwargs) -> Problem:
    """Instantiate a suite problem by id, name, or spec string.

    Unspecified dimensions default to the suite table. Bi-objective families
    reject a different ``n_obj``.

    Raises:
        LookupError: Unknown id or name.
    """
    if isinstance(key, str) and ":" in key:
        key, overrides = parse_problem_spec(key)
        n_var = overrides.pop("n_var", n_var)
        n_obj = overrides.pop("n_obj", n_obj)
        kwargs.update(overrides)
    entry = suite_entry(key)
    n_var = entry.n_var if n_var is None else int(n_var)
    n_obj = entry.n_obj if n_obj is None else int(n_obj)
    cls = _CLASSES[entry.name]
    if entry.name.startswith(("DTLZ", "WFG")):
        return cls(n_var, n_obj, problem_id=entry.id, **kwargs)
    if n_obj != 2:
        raise ValueError(f"{entry.name} is bi-objective")
    return cls(n_var, problem_id=entry.id, **kwargs)
