from __future__ import annotations

import runpy
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def _load(name):
    return runpy.run_path(str(SCRIPTS / name), run_name="not_main")


def test_ratio_trends(capsys):
    _load("ratio_trends.py")["main"](["--max-doubling-m", "4"])
    out = capsys.readouterr().out
    assert "24/91" in out and "False" not in out


def test_oracle_sweep(capsys):
    assert _load("oracle_sweep.py")["main"](["--per-cell", "5"]) == 0
    assert capsys.readouterr().out.startswith("seed 0\n")
