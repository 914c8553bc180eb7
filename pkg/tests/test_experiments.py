import json

import numpy as np
import pytest
from scipy.stats import rankdata

from seemoo.experiments import (
    HEADER,
    ConfigError,
    EpisodeSettings,
    FixedPolicy,
    RandomPolicy,
    RunConfig,
    TraceRow,
    emit_trace,
    episode_streams,
    evaluate,
    load_checkpoint,
    load_trace,
    rank_table,
    run_baseline,
    run_episode,
    save_checkpoint,
    summary_from_traces,
    train,
    variant_config,
    write_rank_table,
)
from seemoo.experiments.cli import main
from seemoo.problems import make_problem, split_setting
from seemoo.scheduler import QNetwork
from seemoo.surrogates import SurrogateKind

CHEAP = ["ZDT1:n_var=4", "DTLZ2:n_var=5,n_obj=3"]


def smoke_config(tmp_path, **kw):
    data = dict(t_max=4, max_fes=70, epochs=1, train_problems=CHEAP[:1], test_problems=CHEAP,
                seeds=[0, 1], out_dir=str(tmp_path), track_hv=False,
                pool_mask=[False, True, False, True, True])
    data.update(kw)
    return RunConfig.from_dict(data).validate()


def test_default_config_values():
    cfg = RunConfig().validate()
    assert (cfg.max_fes, cfg.pop_size, cfg.infill_size, cfg.t_max, cfg.epochs) == (550, 50, 5, 100, 50)
    assert (cfg.lr, cfg.gamma, cfg.buffer_capacity, cfg.batch_size) == (1e-3, 0.9, 256, 32)
    assert (cfg.eps_start, cfg.eps_end, cfg.eps_eval) == (0.8, 0.01, 0.01)
    assert cfg.pool_mask == [True] * 5 and cfg.reward == "igd" and cfg.seeds == list(range(10))
    assert sorted(map(int, cfg.test_problems)) == [3, 7, 10, 13, 16, 23]


@pytest.mark.parametrize("bad", [
    {"max_fes": 551}, {"pool_mask": [False] * 5}, {"pool_mask": [True] * 4}, {"reward": "x"},
    {"mode": "fly"}, {"seeds": []}, {"eps_start": 1.5}, {"batch_size": 0},
    {"reward": "hv", "track_hv": False},
])
def test_config_validation(bad):
    with pytest.raises(ConfigError):
        RunConfig.from_dict(dict(RunConfig().to_dict(), **bad)).validate()


def test_config_yaml_roundtrip(tmp_path):
    cfg = RunConfig(seeds=[3, 4], reward="hv").scaled(7)
    assert cfg.max_fes == 85
    back = RunConfig.load(cfg.save(tmp_path / "c.yaml"))
    assert back == cfg
    with pytest.raises(ConfigError):
        RunConfig.from_dict({"nonsense": 1})
    with pytest.raises(FileNotFoundError):
        RunConfig.load(tmp_path / "missing.yaml")


def test_setting_split_examples():
    train_a, test_a = split_setting("A")
    train_b, test_b = split_setting("B")
    assert set(test_a) == {3, 7, 10, 13, 16, 23} == set(train_b)
    assert len(test_b) == 18
    assert set(train_a) | set(test_a) == set(range(1, 25)) and not set(train_a) & set(test_a)
    cfg = RunConfig().with_setting("B")
    assert sorted(map(int, cfg.train_problems)) == [3, 7, 10, 13, 16, 23]


def test_trace_roundtrip_and_schema(tmp_path):
    rows = [TraceRow(1, 55, 2, 0.1234567890123456789, 0.5, float("nan"), 0.8, 1e-300, np.nan, 3.0, np.nan, np.nan, 0.0)]
    path = emit_trace(rows, tmp_path / "t.csv")
    assert path.read_text().splitlines()[0] == ",".join(HEADER)
    assert HEADER == ("step", "fe", "action", "reward", "igd", "hv", "epsilon", "mse_gp", "mse_mlp1",
                      "mse_mlp2", "mse_knn", "mse_rbfn", "ms")
    back = load_trace(path)[0]
    for a, b in zip(rows[0].__dict__.values(), back.__dict__.values()):
        assert (np.isnan(a) and np.isnan(b)) or a == b
    with pytest.raises(FileNotFoundError):
        load_trace(tmp_path / "none.csv")


def test_checkpoint_roundtrip(tmp_path):
    net = QNetwork(rng=np.random.default_rng(0))
    path = save_checkpoint(tmp_path / "c.json", net, {"gamma": 0.9})
    params, meta = load_checkpoint(path)
    assert meta == {"gamma": 0.9}
    other = QNetwork(rng=np.random.default_rng(1))
    other.load_state_dict(params)
    S = np.random.default_rng(2).random((5, 8))
    assert np.array_equal(other(S).data, net(S).data)
    first = path.read_bytes()
    save_checkpoint(path, net, {"gamma": 0.9})
    assert path.read_bytes() == first
    with pytest.raises(FileNotFoundError):
        load_checkpoint(tmp_path / "nope.json")


def test_rank_table_ties_and_average():
    summaries = {
        "a": {"p1": {"mean": 1.0, "std": 0.1}, "p2": {"mean": 3.0, "std": 0.0}},
        "b": {"p1": {"mean": 1.0, "std": 0.2}, "p2": {"mean": 2.0, "std": 0.0}},
        "c": {"p1": {"mean": 0.5, "std": 0.3}, "p2": {"mean": 4.0, "std": 0.0}},
    }
    table = rank_table(summaries)
    ranks = {row["problem"]: {v: c["rank"] for v, c in row["cells"].items()} for row in table["rows"]}
    assert ranks["p1"] == {"a": 2, "b": 2, "c": 1}
    assert ranks["p2"] == {"a": 2, "b": 1, "c": 3}
    assert table["avg_rank"] == {"a": 2.0, "b": 1.5, "c": 2.0}


def test_rank_table_csv_layout(tmp_path):
    summaries = {v: {"p": {"mean": float(i), "std": 0.5}} for i, v in enumerate(["seemoo", "no_gp"])}
    _, csv_path = write_rank_table(rank_table(summaries), tmp_path / "ranks")
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "problem,seemoo mean (std),seemoo rank,no_gp mean (std),no_gp rank"
    assert lines[1].startswith("p,0.0000e+00 (5.00e-01),1,")
    assert lines[-1].startswith("avg rank,")


def test_variant_configs():
    base = RunConfig()
    assert variant_config(base, "no_mlps").pool_mask == [True, False, False, True, True]
    assert variant_config(base, "no_gp").pool_mask == [False, True, True, True, True]
    binary = variant_config(base, "binary_reward")
    diff = {k for k, v in binary.to_dict().items() if base.to_dict()[k] != v}
    assert diff == {"reward"}
    only_gp = RunConfig(pool_mask=[True, False, False, False, False])
    with pytest.raises(ConfigError):
        variant_config(only_gp, "no_gp")
    with pytest.raises(ConfigError):
        variant_config(base, "no_everything")


def test_smoke_training_writes_checkpoint_and_trace(tmp_path):
    cfg = smoke_config(tmp_path, t_max=5, max_fes=75)
    result = train(cfg, tmp_path / "train")
    assert result.best_checkpoint.exists() and len(result.checkpoints) == 1
    assert len(result.traces) == 1
    rows = load_trace(result.traces[0])
    assert len(rows) == 5 and rows[-1].fe == 75
    assert (tmp_path / "train" / "config.yaml").exists()
    _, meta = load_checkpoint(result.best_checkpoint)
    assert meta["pool_mask"] == cfg.pool_mask and meta["gamma"] == 0.9


def test_evaluate_summary_and_mask_check(tmp_path):
    cfg = smoke_config(tmp_path)
    ckpt = train(cfg, tmp_path / "train").best_checkpoint
    summary, episodes = evaluate(cfg, ckpt, tmp_path / "eval")
    assert summary == summary_from_traces(tmp_path / "eval" / "traces")
    for key, stats in summary.items():
        finals = [ep.final_igd for ep in episodes[key]]
        assert stats["n_seeds"] == 2
        assert stats["mean"] == pytest.approx(np.mean(finals), abs=0)
        assert stats["std"] == pytest.approx(np.std(finals), abs=0)
        for ep in episodes[key]:
            assert ep.fe == 70 and all(r.epsilon == 0.01 for r in ep.rows)
            assert all(cfg.pool_mask[r.action] for r in ep.rows)
    again, _ = evaluate(cfg, ckpt, tmp_path / "eval2")
    for f in (tmp_path / "eval" / "traces").glob("*.csv"):
        assert f.read_bytes() == (tmp_path / "eval2" / "traces" / f.name).read_bytes()
    mismatched = RunConfig.from_dict(dict(cfg.to_dict(), pool_mask=[True] * 5))
    with pytest.raises(ConfigError):
        evaluate(mismatched, ckpt, tmp_path / "bad")


def test_baseline_constant_actions_and_schema(tmp_path):
    cfg = smoke_config(tmp_path, test_problems=CHEAP[:1], seeds=[0])
    for kind in ("knn", SurrogateKind.RBFN):
        _, episodes = run_baseline(cfg, kind, tmp_path / str(kind))
        (ep,) = episodes["ZDT1_m2_n4"]
        assert len({r.action for r in ep.rows}) == 1
        assert ep.fe == cfg.max_fes


def test_paired_initial_sample_across_policies():
    p = make_problem("ZDT1", n_var=4)
    seen = {}
    for name, policy in (("knn", FixedPolicy(SurrogateKind.KNN)), ("random", RandomPolicy())):
        first = []
        run_episode(p, policy, episode_streams(3, p, 0), EpisodeSettings(t_max=2, track_hv=False),
                    observer=lambda rec: first.append(rec.db.X[:50].copy()))
        seen[name] = first[0]
    assert np.array_equal(seen["knn"], seen["random"])


def test_streams_isolated_by_seed():
    p = make_problem("ZDT1", n_var=4)
    a, b = episode_streams(0, p, 0), episode_streams(1, p, 0)
    assert not np.array_equal(a["lhs"].random(4), b["lhs"].random(4))
    c, d = episode_streams(0, p, 0), episode_streams(0, p, 0)
    assert all(np.array_equal(c[k].random(3), d[k].random(3)) for k in c)


def test_cli_baseline_and_ranks(tmp_path, capsys):
    out = tmp_path / "b"
    code = main(["baseline", "--model", "knn", "--t-max", "3", "--seeds", "0", "1",
                 "--problems", CHEAP[0], "--no-hv", "--out", str(out)])
    assert code == 0
    summary = json.loads((out / "summary.json").read_text())
    assert summary["ZDT1_m2_n4"]["n_seeds"] == 2
    assert RunConfig.load(out / "config.yaml").t_max == 3
    code = main(["ranks", f"x={out / 'summary.json'}", f"y={out / 'summary.json'}", "--out", str(tmp_path / "r")])
    assert code == 0
    table = json.loads((tmp_path / "r.json").read_text())
    assert table["avg_rank"] == {"x": 1.0, "y": 1.0}


def test_cli_reports_config_errors(tmp_path, capsys):
    assert main(["baseline", "--model", "gp", "--problems", "NOPE", "--t-max", "1", "--out", str(tmp_path)]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_fronts(tmp_path):
    assert main(["fronts", "--out", str(tmp_path), "--problems", "ZDT2"]) == 0
    assert (tmp_path / "ZDT2_m2.csv").read_text().startswith("# problem=ZDT2_m2 n_obj=2 source=analytic")


def test_ranks_match_scipy_min_method():
    rng = np.random.default_rng(0)
    summaries = {v: {f"p{j}": {"mean": float(rng.integers(0, 3)), "std": 0.0} for j in range(6)}
                 for v in "abcdefg"}
    table = rank_table(summaries)
    for row in table["rows"]:
        means = [row["cells"][v]["mean"] for v in "abcdefg"]
        assert [row["cells"][v]["rank"] for v in "abcdefg"] == rankdata(means, method="min").astype(int).tolist()
