"""Command line surface: exit codes, stage commands, skip messages."""

import json
from pathlib import Path

import pytest

from ethos import cli

ROOT = Path(__file__).resolve().parent.parent
REVIEWS = ROOT / "fixtures" / "reviews.jsonl"
RUN_CONFIG = ROOT / "fixtures" / "run.config"


def run_cli(*args):
    return cli.main([str(a) for a in args])


@pytest.fixture(scope="module")
def run_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli") / "run"
    code = run_cli("run", "--run-dir", d, "--input", REVIEWS, "--config", RUN_CONFIG)
    assert code == 0
    return d


class TestRun:
    def test_run_produces_report(self, run_dir, capsys):
        assert (run_dir / "report.md").exists()

    def test_rerun_skips_current_stages(self, run_dir, capsys):
        code = run_cli("run", "--run-dir", run_dir, "--input", REVIEWS, "--config", RUN_CONFIG)
        out = capsys.readouterr().out
        assert code == 0
        assert "skipped" in out

    def test_single_stage_reports_status(self, run_dir, capsys):
        code = run_cli("train", "--run-dir", run_dir, "--config", RUN_CONFIG)
        out = capsys.readouterr().out
        assert code == 0
        assert "train" in out

    def test_force_retrains(self, run_dir, capsys):
        code = run_cli("train", "--run-dir", run_dir, "--config", RUN_CONFIG, "--force")
        out = capsys.readouterr().out
        assert code == 0
        assert "k = 6" in out


class TestExitCodes:
    def test_missing_input_file_is_usage_error(self, tmp_path, capsys):
        code = run_cli("run", "--run-dir", tmp_path / "r", "--input", tmp_path / "absent.jsonl")
        assert code == 2
        assert "error" in capsys.readouterr().err.lower()

    def test_app_without_store_is_usage_error(self, tmp_path, capsys):
        code = run_cli("ingest", "--run-dir", tmp_path / "r", "--app", "some.app")
        assert code == 2

    def test_unknown_config_key_is_usage_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.config"
        bad.write_text("not_a_setting = 1\n")
        code = run_cli("run", "--run-dir", tmp_path / "r", "--input", REVIEWS, "--config", bad)
        assert code == 2

    def test_stage_without_artifacts_fails(self, tmp_path, capsys):
        code = run_cli("train", "--run-dir", tmp_path / "r")
        assert code == 3
        assert "train" in capsys.readouterr().err

    def test_unknown_flag_exits_two(self, tmp_path, capsys):
        with pytest.raises(SystemExit) as exc:
            run_cli("run", "--run-dir", tmp_path / "r", "--bogus")
        assert exc.value.code == 2


class TestOverrides:
    def test_cli_seed_overrides_config(self, tmp_path, capsys):
        d = tmp_path / "r"
        code = run_cli("run", "--run-dir", d, "--input", REVIEWS, "--config", RUN_CONFIG, "--seed", "11")
        assert code == 0
        manifest = json.loads((d / "manifest.json").read_text())
        assert manifest["config_snapshot"]["seed"] == 11

    def test_k_override_changes_model(self, tmp_path, capsys):
        d = tmp_path / "r"
        code = run_cli("run", "--run-dir", d, "--input", REVIEWS, "--config", RUN_CONFIG, "--k", "4")
        assert code == 0
        model = json.loads((d / "model.json").read_text())
        assert model["config"]["k"] == 4
