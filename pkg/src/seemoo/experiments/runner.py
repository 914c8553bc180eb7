"""Training, evaluation, baselines, ablations and rank tables."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy.stats import rankdata

from ..problems import make_problem
from ..scheduler import DQNAgent, DQNConfig, epsilon_at
from ..surrogates import SurrogateKind
from .checkpoint import load_checkpoint, save_checkpoint
from .config import ConfigError, RunConfig
from .episode import AgentPolicy, EpisodeResult, EpisodeSettings, FixedPolicy, Policy, RandomPolicy, run_episode
from .rng import EVAL_TAG, agent_streams, episode_streams, train_tag
from .traces import emit_trace, load_trace

log = logging.getLogger(__name__)

# pool variants remove models from the configured pool; reward variants swap the reward
ABLATIONS = {
    "no_gp": {"remove": (SurrogateKind.GP,)},
    "no_mlps": {"remove": (SurrogateKind.MLP1, SurrogateKind.MLP2)},
    "no_knn": {"remove": (SurrogateKind.KNN,)},
    "no_rbfn": {"remove": (SurrogateKind.RBFN,)},
    "binary_reward": {"reward": "binary"},
    "hv_reward": {"reward": "hv"},
}
# column order of the ablation table
VARIANTS = ("seemoo", "no_gp", "no_knn", "no_mlps", "no_rbfn", "binary_reward", "hv_reward")


def episode_settings(cfg: RunConfig) -> EpisodeSettings:
    return EpisodeSettings(
        pop_size=cfg.pop_size,
        infill_size=cfg.infill_size,
        t_max=cfg.t_max,
        reward=cfg.reward,
        track_hv=cfg.track_hv,
        wall_time=cfg.wall_time,
        fronts_dir=cfg.fronts_dir,
    )


def dqn_config(cfg: RunConfig) -> DQNConfig:
    return DQNConfig(
        lr=cfg.lr,
        gamma=cfg.gamma,
        batch_size=cfg.batch_size,
        buffer_capacity=cfg.buffer_capacity,
        target_sync=cfg.target_sync,
        warmup=cfg.batch_size,
        rectifier=cfg.rectifier,
    )


def scheduler_meta(cfg: RunConfig) -> dict:
    return {
        "gamma": cfg.gamma,
        "eps_start": cfg.eps_start,
        "eps_end": cfg.eps_end,
        "rectifier": cfg.rectifier,
        "target_sync": cfg.target_sync,
        "pool_mask": list(cfg.pool_mask),
        "reward": cfg.reward,
    }


def trace_name(problem, seed: int) -> str:
    return f"{problem.label}_n{problem.n_var}_seed{seed}.csv"


@dataclass
class TrainResult:
    best_checkpoint: Path
    checkpoints: list[Path] = field(default_factory=list)
    epoch_scores: list[float] = field(default_factory=list)
    traces: list[Path] = field(default_factory=list)
    aborted: int = 0


def train(cfg: RunConfig, out_dir: str | Path | None = None) -> TrainResult:
    """Train the scheduler over ``cfg.train_problems`` for ``cfg.epochs`` epochs.

    Each epoch visits every training problem once in an order shuffled by the
    agent's stream, writes one trace per episode and a checkpoint, and keeps
    ``best.json`` for the lowest mean final IGD.
    """
    cfg.validate()
    out = Path(out_dir or cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    cfg.save(out / "config.yaml")
    problems = [make_problem(p) for p in cfg.train_problems]
    if not problems:
        raise ConfigError("no training problems")
    rngs = agent_streams(cfg.train_seed)
    agent = DQNAgent(dqn_config(cfg), rngs["init"], enabled=cfg.pool_mask)
    total = cfg.epochs * len(problems) * cfg.t_max
    policy = AgentPolicy(agent, lambda step: epsilon_at(step, total, cfg.eps_start, cfg.eps_end))
    settings = episode_settings(cfg)
    result = TrainResult(best_checkpoint=out / "checkpoints" / "best.json")
    best = np.inf
    step = 0
    for epoch in range(cfg.epochs):
        finals = []
        for idx in rngs["shuffle"].permutation(len(problems)):
            problem = problems[int(idx)]
            streams = episode_streams(cfg.train_seed, problem, train_tag(epoch))
            ep = run_episode(problem, policy, streams, settings, learner=agent,
                             replay_rng=rngs["replay"], global_step=step)
            step += cfg.t_max
            result.traces.append(emit_trace(ep.rows, out / "train" / f"epoch{epoch:03d}" / trace_name(problem, cfg.train_seed)))
            if ep.aborted:
                result.aborted += 1
                continue
            finals.append(ep.final_igd)
        score = float(np.mean(finals)) if finals else float("inf")
        result.epoch_scores.append(score)
        meta = dict(scheduler_meta(cfg), epoch=epoch, mean_final_igd=score, updates=agent.n_updates)
        result.checkpoints.append(save_checkpoint(out / "checkpoints" / f"epoch{epoch:03d}.json", agent.net, meta))
        if score < best or epoch == 0:
            best = score
            save_checkpoint(result.best_checkpoint, agent.net, meta)
        log.info("epoch %d mean final IGD %.6g", epoch, score)
    return result


def load_agent(cfg: RunConfig, checkpoint) -> DQNAgent:
    params, meta = load_checkpoint(checkpoint)
    if list(meta.get("pool_mask", [])) != list(cfg.pool_mask):
        raise ConfigError(f"checkpoint pool mask {meta.get('pool_mask')} differs from config {cfg.pool_mask}")
    if bool(meta.get("rectifier", True)) != cfg.rectifier:
        raise ConfigError("checkpoint rectifier flag differs from config")
    agent = DQNAgent(dqn_config(cfg), np.random.default_rng(0), enabled=cfg.pool_mask)
    agent.net.load_state_dict(params)
    agent.target.copy_from(agent.net)
    return agent


def summarize(finals: dict[str, list[float]]) -> dict:
    """Mean and population std (ddof 0) of final IGD per problem."""
    return {
        label: {
            "mean": float(np.mean(v)),
            "std": float(np.std(v)),
            "n_seeds": len(v),
            "final_igd": [float(x) for x in v],
        }
        for label, v in finals.items()
    }


def run_policy(cfg: RunConfig, policy_factory, out_dir, problems=None) -> tuple[dict, dict[str, list[EpisodeResult]]]:
    """Run a frozen policy on every (test problem, seed) pair and write traces."""
    out = Path(out_dir)
    settings = episode_settings(cfg)
    finals: dict[str, list[float]] = {}
    episodes: dict[str, list[EpisodeResult]] = {}
    for spec in problems or cfg.test_problems:
        problem = make_problem(spec)
        key = f"{problem.label}_n{problem.n_var}"
        for seed in cfg.seeds:
            ep = run_episode(problem, policy_factory(), episode_streams(seed, problem, EVAL_TAG), settings)
            emit_trace(ep.rows, out / "traces" / trace_name(problem, seed))
            episodes.setdefault(key, []).append(ep)
            if not ep.aborted:
                finals.setdefault(key, []).append(ep.final_igd)
    summary = summarize(finals)
    out.mkdir(parents=True, exist_ok=True)
    (out / "summary.json").write_text(json.dumps(summary, sort_keys=True, indent=1) + "\n", encoding="utf-8")
    return summary, episodes


def evaluate(cfg: RunConfig, checkpoint, out_dir=None):
    """Frozen network, epsilon fixed at ``cfg.eps_eval``, no learning."""
    cfg.validate()
    agent = load_agent(cfg, checkpoint)
    out = Path(out_dir or cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    cfg.save(out / "config.yaml")
    return run_policy(cfg, lambda: AgentPolicy(agent, lambda _: cfg.eps_eval), out)


def run_baseline(cfg: RunConfig, kind, out_dir=None):
    """The same loop with the scheduler replaced by a constant model choice."""
    cfg.validate()
    kind = SurrogateKind(kind) if not isinstance(kind, str) else SurrogateKind[kind.upper()]
    out = Path(out_dir or cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    cfg.save(out / "config.yaml")
    return run_policy(cfg, lambda: FixedPolicy(kind), out)


def run_random(cfg: RunConfig, out_dir=None):
    """Uniform random model choice among the enabled pool."""
    cfg.validate()
    out = Path(out_dir or cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    cfg.save(out / "config.yaml")
    return run_policy(cfg, lambda: RandomPolicy(cfg.pool_mask), out)


def variant_config(cfg: RunConfig, variant: str) -> RunConfig:
    if variant == "seemoo":
        return RunConfig.from_dict(cfg.to_dict())
    if variant not in ABLATIONS:
        raise ConfigError(f"unknown ablation {variant!r}; expected one of {sorted(ABLATIONS)}")
    change = ABLATIONS[variant]
    data = cfg.to_dict()
    if "remove" in change:
        data["pool_mask"] = [on and SurrogateKind(i) not in change["remove"] for i, on in enumerate(cfg.pool_mask)]
    if "reward" in change:
        data["reward"] = change["reward"]
        data["track_hv"] = data["track_hv"] or change["reward"] == "hv"
    return RunConfig.from_dict(data).validate()


def ablate(cfg: RunConfig, variant: str, out_dir=None):
    """Train and evaluate one variant; returns its evaluation summary."""
    vcfg = variant_config(cfg, variant)
    out = Path(out_dir or cfg.out_dir) / variant
    trained = train(vcfg, out / "train_run")
    summary, _ = evaluate(vcfg, trained.best_checkpoint, out / "eval")
    return summary


def ablate_all(cfg: RunConfig, out_dir=None, variants=VARIANTS) -> dict:
    out = Path(out_dir or cfg.out_dir)
    summaries = {v: ablate(cfg, v, out) for v in variants}
    table = rank_table(summaries)
    write_rank_table(table, out / "ranks")
    return table


def rank_table(summaries: dict[str, dict]) -> dict:
    """Per-problem ranks of mean final IGD (ties share the lowest rank) and average rank.

    Args:
        summaries: ``{variant: {problem: {"mean": .., "std": ..}}}``.
    """
    variants = list(summaries)
    problems = sorted(set.intersection(*(set(s) for s in summaries.values()))) if summaries else []
    rows = []
    for p in problems:
        means = np.array([summaries[v][p]["mean"] for v in variants])
        ranks = rankdata(means, method="min")
        rows.append({
            "problem": p,
            "cells": {v: {"mean": float(summaries[v][p]["mean"]), "std": float(summaries[v][p]["std"]),
                          "rank": int(r)} for v, r in zip(variants, ranks)},
        })
    avg = {v: float(np.mean([row["cells"][v]["rank"] for row in rows])) if rows else float("nan") for v in variants}
    return {"variants": variants, "rows": rows, "avg_rank": avg}


def write_rank_table(table: dict, path_stem) -> tuple[Path, Path]:
    """Write the table as JSON and as a CSV with ``mean (std)`` and rank columns."""
    stem = Path(path_stem)
    stem.parent.mkdir(parents=True, exist_ok=True)
    json_path = stem.with_suffix(".json")
    json_path.write_text(json.dumps(table, sort_keys=True, indent=1) + "\n", encoding="utf-8")
    variants = table["variants"]
    lines = ["problem," + ",".join(f"{v} mean (std),{v} rank" for v in variants)]
    for row in table["rows"]:
        cells = [f"{c['mean']:.4e} ({c['std']:.2e}),{c['rank']}" for c in (row["cells"][v] for v in variants)]
        lines.append(row["problem"] + "," + ",".join(cells))
    lines.append("avg rank," + ",".join(f",{table['avg_rank'][v]:.2f}" for v in variants))
    csv_path = stem.with_suffix(".csv")
    csv_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return json_path, csv_path


def summary_from_traces(trace_dir) -> dict:
    """Recompute per-problem final-IGD statistics from a directory of traces."""
    finals: dict[str, list[float]] = {}
    for path in sorted(Path(trace_dir).glob("*.csv")):
        rows = load_trace(path)
        if not rows:
            continue
        key = path.stem.rsplit("_seed", 1)[0]
        finals.setdefault(key, []).append(rows[-1].igd)
    return summarize(finals)
