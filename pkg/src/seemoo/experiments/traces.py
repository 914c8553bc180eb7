"""Per-step trace rows and their CSV form."""

from __future__ import annotations

import csv
import math
from dataclasses import astuple, dataclass, fields
from pathlib import Path

HEADER = (
    "step", "fe", "action", "reward", "igd", "hv", "epsilon",
    "mse_gp", "mse_mlp1", "mse_mlp2", "mse_knn", "mse_rbfn", "ms",
)
_INT_COLUMNS = {"step", "fe", "action"}


@dataclass(frozen=True)
class TraceRow:
    step: int
    fe: int
    action: int
    reward: float
    igd: float
    hv: float
    epsilon: float
    mse_gp: float
    mse_mlp1: float
    mse_mlp2: float
    mse_knn: float
    mse_rbfn: float
    ms: float = 0.0


assert tuple(f.name for f in fields(TraceRow)) == HEADER


def _fmt(value) -> str:
    if isinstance(value, int):
        return str(value)
    return "nan" if math.isnan(value) else format(value, ".17g")


def emit_trace(rows, path) -> Path:
    """Write rows as CSV with 17 significant digits."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(",".join(HEADER) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(v) for v in astuple(row)) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write trace {path}: {exc}") from exc
    return path


def load_trace(path) -> list[TraceRow]:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"trace not found: {path}")
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader, ()))
        if header != HEADER:
            raise ValueError(f"{path}: unexpected header {header}")
        rows = []
        for rec in reader:
            vals = [int(v) if name in _INT_COLUMNS else float(v) for name, v in zip(HEADER, rec)]
            rows.append(TraceRow(*vals))
    return rows
