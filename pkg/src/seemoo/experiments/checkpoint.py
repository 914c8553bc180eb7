"""Deterministic JSON checkpoints of the Q-network and scheduler settings."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

FORMAT = "seemoo-qnet"
VERSION = 1


def encode_arrays(named) -> list[dict]:
    return [
        {"name": name, "shape": list(arr.shape), "data": np.asarray(arr, dtype=np.float64).ravel().tolist()}
        for name, arr in named
    ]


def decode_arrays(items) -> list[tuple[str, np.ndarray]]:
    return [(it["name"], np.asarray(it["data"], dtype=np.float64).reshape(it["shape"])) for it in items]


def save_checkpoint(path, net, meta: dict) -> Path:
    """Serialize parameters and metadata; identical inputs give identical bytes."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = {"format": FORMAT, "version": VERSION, "meta": meta, "params": encode_arrays(net.state_dict())}
    path.write_text(json.dumps(doc, sort_keys=True, indent=1) + "\n", encoding="utf-8")
    return path


def load_checkpoint(path) -> tuple[list[tuple[str, np.ndarray]], dict]:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"checkpoint not found: {path}")
    doc = json.loads(path.read_text(encoding="utf-8"))
    if doc.get("format") != FORMAT:
        raise ValueError(f"{path}: not a Q-network checkpoint")
    if doc.get("version") != VERSION:
        raise ValueError(f"{path}: unsupported checkpoint version {doc.get('version')}")
    return decode_arrays(doc["params"]), doc["meta"]
