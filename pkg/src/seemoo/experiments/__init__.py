"""Experiment orchestration: configs, episodes, training and evaluation."""

from .checkpoint import load_checkpoint, save_checkpoint
from .config import MODES, POLICIES, ConfigError, RunConfig
from .episode import (
    AgentPolicy,
    EpisodeAborted,
    EpisodeResult,
    EpisodeSettings,
    FixedPolicy,
    RandomPolicy,
    StepRecord,
    run_episode,
)
from .rng import EVAL_TAG, agent_streams, episode_streams, train_tag
from .runner import (
    ABLATIONS,
    VARIANTS,
    ablate,
    ablate_all,
    evaluate,
    rank_table,
    run_baseline,
    run_random,
    summarize,
    summary_from_traces,
    train,
    variant_config,
    write_rank_table,
)
from .traces import HEADER, TraceRow, emit_trace, load_trace

__all__ = [
    "load_checkpoint", "save_checkpoint", "MODES", "POLICIES", "ConfigError", "RunConfig",
    "AgentPolicy", "EpisodeAborted", "EpisodeResult", "EpisodeSettings", "FixedPolicy",
    "RandomPolicy", "StepRecord", "run_episode", "EVAL_TAG", "agent_streams",
    "episode_streams", "train_tag", "ABLATIONS", "VARIANTS", "ablate", "ablate_all",
    "evaluate", "rank_table", "run_baseline", "run_random", "summarize",
    "summary_from_traces", "train", "variant_config", "write_rank_table",
    "HEADER", "TraceRow", "emit_trace", "load_trace",
]
