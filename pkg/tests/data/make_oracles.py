"""Regenerate ``oracles.json`` from pymoo 0.6.2.

pymoo is used only here, offline, as an independent implementation. The
frozen JSON is what the tests read; pymoo is not a dependency of the package.

    python3 tests/data/make_oracles.py
"""

import json
from pathlib import Path

import numpy as np
from pymoo.indicators.hv import HV
from pymoo.indicators.igd import IGD
from pymoo.problems import get_problem
from pymoo.util.nds.non_dominated_sorting import NonDominatedSorting

OUT = Path(__file__).with_name("oracles.json")

CASES = [
    # (our name, pymoo name, n_var, n_obj, pymoo kwargs)
    ("ZDT1", "zdt1", 30, 2, {}),
    ("ZDT2", "zdt2", 30, 2, {}),
    ("ZDT3", "zdt3", 30, 2, {}),
    ("ZDT4", "zdt4", 10, 2, {}),
    ("ZDT6", "zdt6", 10, 2, {}),
    ("DTLZ1", "dtlz1", 10, 5, {}),
    ("DTLZ2", "dtlz2", 10, 5, {}),
    ("DTLZ3", "dtlz3", 10, 5, {}),
    ("DTLZ4", "dtlz4", 10, 5, {}),
    ("DTLZ5", "dtlz5", 30, 3, {}),
    ("DTLZ6", "dtlz6", 30, 3, {}),
    ("DTLZ7", "dtlz7", 30, 3, {}),
    ("WFG1", "wfg1", 10, 3, {"k": 4}),
    ("WFG2", "wfg2", 10, 3, {"k": 4}),
    ("WFG3", "wfg3", 10, 3, {"k": 4}),
    ("WFG4", "wfg4", 10, 5, {"k": 8}),
    ("WFG5", "wfg5", 30, 5, {"k": 8}),
    ("WFG6", "wfg6", 30, 5, {"k": 8}),
    ("WFG7", "wfg7", 30, 5, {"k": 8}),
    ("WFG8", "wfg8", 30, 5, {"k": 8}),
    ("WFG9", "wfg9", 30, 5, {"k": 8}),
]


def problem_values(rng):
    out = []
    for name, key, n_var, n_obj, kw in CASES:
        extra = {} if key.startswith("zdt") else {"n_obj": n_obj}
        prob = get_problem(key, n_var=n_var, **extra, **kw)
        X = prob.xl + rng.random((8, n_var)) * (prob.xu - prob.xl)
        out.append({"name": name, "n_var": n_var, "n_obj": n_obj, "X": X.tolist(),
                    "F": prob.evaluate(X).tolist()})
    return out


def hv_values(rng):
    out = []
    for m, n in ((2, 20), (3, 15), (3, 40), (4, 12)):
        P = rng.random((n, m))
        ref = np.full(m, 1.1)
        out.append({"points": P.tolist(), "ref": ref.tolist(), "hv": float(HV(ref_point=ref)(P))})
    return out


def igd_values(rng):
    out = []
    for m in (2, 3, 5):
        R = rng.random((30, m))
        A = rng.random((12, m))
        out.append({"front": R.tolist(), "approx": A.tolist(), "igd": float(IGD(R)(A))})
    return out


def nds_values(rng):
    out = []
    for m in (2, 3, 4):
        F = rng.integers(0, 6, size=(40, m)).astype(float)
        fronts = NonDominatedSorting().do(F)
        out.append({"F": F.tolist(), "fronts": [sorted(int(i) for i in f) for f in fronts]})
    return out


def main():
    rng = np.random.default_rng(20240611)
    data = {
        "generator": "pymoo 0.6.2",
        "problems": problem_values(rng),
        "hv": hv_values(rng),
        "igd": igd_values(rng),
        "nds": nds_values(rng),
    }
    OUT.write_text(json.dumps(data, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
