import json
from pathlib import Path

import pytest

DATA = Path(__file__).with_name("data")

_CRITERIA: dict[int, dict] = {}


@pytest.fixture(scope="session")
def oracles():
    """Values frozen from an independent implementation (see data/make_oracles.py)."""
    return json.loads((DATA / "oracles.json").read_text(encoding="utf-8"))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    number, title = marker.args[:2]
    entry = _CRITERIA.setdefault(number, {"title": title, "ok": True, "seconds": 0.0, "reason": ""})
    entry["seconds"] += rep.duration
    if rep.failed:
        entry["ok"] = False
        crash = getattr(rep.longrepr, "reprcrash", None)
        message = crash.message if crash is not None else str(rep.longrepr)
        entry["reason"] = message.splitlines()[0][:160] if message else "failed"
    elif rep.skipped and rep.when == "setup":
        entry["ok"] = None


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        e = _CRITERIA[number]
        status = {True: "PASS", False: "FAIL", None: "SKIP"}[e["ok"]]
        line = f"criterion {number} [{e['title']}]: {status} ({e['seconds']:.1f}s)"
        if e["reason"]:
            line += f" - {e['reason']}"
        terminalreporter.write_line(line)
