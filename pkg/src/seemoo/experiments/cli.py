"""Command-line entry point: ``seemoo <verb> [options]``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from ..problems import SUITE, build_front, make_problem, write_front
from .config import ConfigError, RunConfig
from . import runner


def _base_config(args) -> RunConfig:
    cfg = RunConfig.load(args.config) if args.config else RunConfig()
    if args.setting:
        cfg = cfg.with_setting(args.setting)
    data = cfg.to_dict()
    overrides = {
        "t_max": args.t_max, "epochs": getattr(args, "epochs", None), "out_dir": args.out,
        "train_seed": getattr(args, "train_seed", None), "reward": getattr(args, "reward", None),
    }
    data.update({k: v for k, v in overrides.items() if v is not None})
    if args.seeds is not None:
        data["seeds"] = args.seeds
    if args.problems:
        key = "train_problems" if args.verb == "train" else "test_problems"
        data[key] = args.problems
    if args.no_hv:
        data["track_hv"] = False
    data["mode"] = {"ablate": "ablate", "train": "train", "eval": "eval"}.get(args.verb, "baseline")
    cfg = RunConfig.from_dict(data)
    if args.t_max is not None:
        cfg = cfg.scaled(args.t_max)
    return cfg.validate()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seemoo", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--config", help="YAML run configuration")
        p.add_argument("--setting", choices=("A", "B"), help="train/test split")
        p.add_argument("--out", help="output directory (default from config)")
        p.add_argument("--t-max", type=int, dest="t_max", help="steps per episode; budget follows")
        p.add_argument("--seeds", type=int, nargs="+")
        p.add_argument("--problems", nargs="+", help="problem ids, names or NAME:n_var=..,n_obj=..")
        p.add_argument("--no-hv", action="store_true", help="skip hypervolume tracking")
        return p

    p = common(sub.add_parser("train", help="train the scheduler"))
    p.add_argument("--epochs", type=int)
    p.add_argument("--train-seed", type=int, dest="train_seed")
    p.add_argument("--reward", choices=("igd", "binary", "hv"))

    p = common(sub.add_parser("eval", help="evaluate a trained checkpoint"))
    p.add_argument("--checkpoint", required=True)

    p = common(sub.add_parser("baseline", help="fixed-model or random baseline"))
    p.add_argument("--model", required=True, choices=("gp", "mlp1", "mlp2", "knn", "rbfn", "random"))

    p = common(sub.add_parser("ablate", help="train and evaluate ablation variants"))
    p.add_argument("--epochs", type=int)
    p.add_argument("--train-seed", type=int, dest="train_seed")
    p.add_argument("--variants", nargs="+", default=list(runner.VARIANTS), choices=runner.VARIANTS)

    p = sub.add_parser("fronts", help="build reference fronts")
    p.add_argument("--out", required=True)
    p.add_argument("--problems", nargs="+", default=[str(e.id) for e in SUITE])

    p = sub.add_parser("ranks", help="rank table from evaluation summaries")
    p.add_argument("summaries", nargs="+", help="VARIANT=path/to/summary.json")
    p.add_argument("--out", required=True, help="output path stem")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _dispatch(args)
    except (ConfigError, FileNotFoundError, LookupError) as exc:
        print(f"seemoo: error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.verb == "fronts":
        for spec in args.problems:
            problem = make_problem(spec)
            front = build_front(problem)
            write_front(Path(args.out) / f"{problem.label}.csv", front)
            print(f"{problem.label}: {len(front)} points ({front.source})")
        return 0
    if args.verb == "ranks":
        summaries = {}
        for item in args.summaries:
            name, _, path = item.partition("=")
            if not path:
                raise ConfigError(f"expected VARIANT=path, got {item!r}")
            summaries[name] = json.loads(Path(path).read_text(encoding="utf-8"))
        table = runner.rank_table(summaries)
        for p in runner.write_rank_table(table, args.out):
            print(p)
        return 0

    cfg = _base_config(args)
    out = Path(cfg.out_dir)
    if args.verb == "train":
        result = runner.train(cfg, out)
        print(f"best checkpoint: {result.best_checkpoint}")
    elif args.verb == "eval":
        summary, _ = runner.evaluate(cfg, args.checkpoint, out)
        print(json.dumps(summary, indent=1, sort_keys=True))
    elif args.verb == "baseline":
        if args.model == "random":
            summary, _ = runner.run_random(cfg, out)
        else:
            summary, _ = runner.run_baseline(cfg, args.model, out)
        print(json.dumps(summary, indent=1, sort_keys=True))
    elif args.verb == "ablate":
        cfg.save(out / "config.yaml")
        table = runner.ablate_all(cfg, out, tuple(args.variants))
        print(json.dumps(table["avg_rank"], indent=1, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
