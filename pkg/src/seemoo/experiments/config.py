"""Run configuration with YAML round-tripping."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

import yaml

from ..problems.registry import split_setting
from ..scheduler.state import REWARD_KINDS
from ..surrogates.base import N_KINDS

MODES = ("train", "eval", "baseline", "ablate")
POLICIES = ("seemoo", "fixed", "random")


class ConfigError(ValueError):
    """Inconsistent run configuration."""


def _default_problems(which: int):
    return lambda: [str(i) for i in split_setting("A")[which]]


@dataclass
class RunConfig:
    """Every knob of a training, evaluation, baseline or ablation run.

    Problems are given as suite ids, names, or spec strings such as
    ``"DTLZ2:n_var=10,n_obj=3"``.
    """

    mode: str = "train"
    train_problems: list[str] = field(default_factory=_default_problems(0))
    test_problems: list[str] = field(default_factory=_default_problems(1))
    max_fes: int = 550
    pop_size: int = 50
    infill_size: int = 5
    t_max: int = 100
    epochs: int = 50
    lr: float = 1e-3
    gamma: float = 0.9
    buffer_capacity: int = 256
    batch_size: int = 32
    eps_start: float = 0.8
    eps_end: float = 0.01
    eps_eval: float = 0.01
    reward: str = "igd"
    pool_mask: list[bool] = field(default_factory=lambda: [True] * N_KINDS)
    rectifier: bool = True
    target_sync: int = 10
    seeds: list[int] = field(default_factory=lambda: list(range(10)))
    train_seed: int = 0
    out_dir: str = "runs"
    track_hv: bool = True
    wall_time: bool = False
    fronts_dir: str | None = None

    def __post_init__(self):
        self.train_problems = [str(p) for p in self.train_problems]
        self.test_problems = [str(p) for p in self.test_problems]
        self.pool_mask = [bool(v) for v in self.pool_mask]
        self.seeds = [int(s) for s in self.seeds]

    def validate(self) -> "RunConfig":
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.reward not in REWARD_KINDS:
            raise ConfigError(f"reward must be one of {REWARD_KINDS}, got {self.reward!r}")
        counts = {k: getattr(self, k) for k in ("max_fes", "pop_size", "infill_size", "t_max", "epochs",
                                                "buffer_capacity", "batch_size")}
        bad = [k for k, v in counts.items() if int(v) < 1]
        if bad:
            raise ConfigError(f"counts must be positive: {bad}")
        if self.max_fes != self.pop_size + self.infill_size * self.t_max:
            raise ConfigError("max_fes must equal pop_size + infill_size * t_max")
        if len(self.pool_mask) != N_KINDS or not any(self.pool_mask):
            raise ConfigError("pool_mask needs five flags with at least one enabled")
        if self.reward == "hv" and not self.track_hv:
            raise ConfigError("the hv reward needs track_hv enabled")
        if self.target_sync < 0:
            raise ConfigError("target_sync must be >= 0")
        if not self.seeds:
            raise ConfigError("at least one seed is required")
        for name in ("eps_start", "eps_end", "eps_eval"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ConfigError(f"{name} must lie in [0, 1]")
        return self

    def scaled(self, t_max: int) -> "RunConfig":
        """Copy with a different step count and the matching FE budget."""
        data = self.to_dict()
        data.update(t_max=t_max, max_fes=self.pop_size + self.infill_size * t_max)
        return RunConfig.from_dict(data)

    def with_setting(self, setting: str) -> "RunConfig":
        train, test = split_setting(setting)
        data = self.to_dict()
        data.update(train_problems=[str(i) for i in train], test_problems=[str(i) for i in test])
        return RunConfig.from_dict(data)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {unknown}")
        return cls(**data)

    def dump_yaml(self) -> str:
        return yaml.safe_dump(self.to_dict(), sort_keys=True, default_flow_style=None)

    def save(self, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.dump_yaml(), encoding="utf-8")
        return path

    @classmethod
    def load(cls, path) -> "RunConfig":
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"config file not found: {path}")
        data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
        return cls.from_dict(data)
