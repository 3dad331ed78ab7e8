"""Command-line interface: exit codes, file outputs, config handling."""

from __future__ import annotations

import json

import pytest

from rootspiral.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, run
from rootspiral.config import OUTPUT_DIR_ENV


def test_spiral_writes_csv(tmp_path):
    out = tmp_path / "spiral.csv"
    assert run(["spiral", "--n-max", "500", "--out", str(out)]) == EXIT_OK
    lines = out.read_text().strip().split("\n")
    assert lines[0] == "n,radius,theta_rad,winding,x,y"
    assert len(lines) == 501


def test_spiral_below_minimum_is_usage_error(tmp_path):
    out = tmp_path / "spiral.csv"
    assert run(["spiral", "--n-max", "1", "--out", str(out)]) == EXIT_USAGE
    assert not out.exists()


def test_unknown_subcommand_and_missing_args():
    assert run(["frobnicate"]) == EXIT_USAGE
    assert run(["discover"]) == EXIT_USAGE  # --divisor required
    assert run(["report"]) == EXIT_USAGE  # needs --all or --divisor


def test_verify_d17_exits_zero(capsys):
    assert run(["verify", "--divisor", "17"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "0 mismatched" in out
    assert "known discrepancies" in out


def test_verify_unpublished_divisor_is_usage_error(capsys):
    assert run(["verify", "--divisor", "7"]) == EXIT_USAGE


def test_discover_d7_no_paper_data(tmp_path):
    out = tmp_path / "d7.json"
    assert run(["discover", "--divisor", "7", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert [c["status"] for c in data["claims"]] == ["no-paper-data"]
    assert data["counts"]["positive"] + data["counts"]["negative"] > 0


def test_render_writes_svg(tmp_path):
    out = tmp_path / "fig.svg"
    assert run(["render", "--divisor", "17", "--out", str(out)]) == EXIT_OK
    body = out.read_bytes()
    assert body.startswith(b"<?xml")
    assert b"<svg" in body


def test_report_single_divisor(tmp_path):
    assert run(["report", "--divisor", "17", "--out", str(tmp_path)]) == EXIT_OK
    for name in ("report_d17.json", "report_d17.txt", "figure_d17.svg"):
        assert (tmp_path / name).exists(), name


def test_output_dir_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path))
    assert run(["discover", "--divisor", "17"]) == EXIT_OK
    assert (tmp_path / "report_d17.json").exists()


def test_config_file_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n_max": 5000}))
    out = tmp_path / "d17.json"
    code = run(["discover", "--divisor", "17", "--config", str(cfg), "--out", str(out)])
    assert code == EXIT_OK
    assert json.loads(out.read_text())["parameters"]["n_max"] == 5000


def test_config_file_rejects_unknown_keys(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n_maximum": 5000}))
    out = tmp_path / "d17.json"
    code = run(["discover", "--divisor", "17", "--config", str(cfg), "--out", str(out)])
    assert code == EXIT_USAGE


def test_cli_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["discover", "--divisor", "13", "--out", str(a)]) == EXIT_OK
    assert run(["discover", "--divisor", "13", "--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_help_lists_subcommands(capsys):
    assert run(["--help"]) == 0
    out = capsys.readouterr().out
    for sub in ("spiral", "verify", "discover", "render", "report"):
        assert sub in out
