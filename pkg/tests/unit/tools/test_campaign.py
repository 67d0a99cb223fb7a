import json

import pytest

from qbist.campaign import CampaignConfig
from tools.cli import cli
from tools.commands.campaign import merge_config
from tools.core.config import resolve_command_config


@pytest.fixture()
def and_oracle_file(make_oracle_file):
    return make_oracle_file("k=2\nminterms=3\n", "and")


def _campaign(runner, oracle, output, *args, env=None):
    return runner.invoke(cli, ["campaign", oracle, str(output), *args], env=env)


class TestCampaignCommand:
    def test_example_passes(self, runner, tmp_path, example_oracle_file):
        output = tmp_path / "report.json"
        result = _campaign(runner, example_oracle_file, output)
        assert result.exit_code == 0, result.output
        document = json.loads(output.read_text())
        assert document["summary"]["passed"] is True
        assert "census mismatch" in result.output

    def test_byte_identical_reruns(self, runner, tmp_path, and_oracle_file):
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        args = ["--multi-fault", "2", "--trials", "5", "--seed", "9"]
        assert _campaign(runner, and_oracle_file, first, *args).exit_code == 0
        assert _campaign(runner, and_oracle_file, second, *args).exit_code == 0
        assert first.read_bytes() == second.read_bytes()

    def test_fault_subset_exits_3(self, runner, tmp_path, and_oracle_file):
        output = tmp_path / "report.json"
        result = _campaign(
            runner, and_oracle_file, output, "--fault", "pauli:z:w0:q0"
        )
        assert result.exit_code == 3
        document = json.loads(output.read_text())
        assert document["summary"]["passed"] is False
        assert {"requirement": 1, "column": "T1"} in document["summary"]["missing"]

    def test_tests_file(self, runner, tmp_path, and_oracle_file):
        tests = tmp_path / "tests.json"
        generated = runner.invoke(
            cli, ["gen-tests", and_oracle_file, str(tests), "--suite", "alternative"]
        )
        assert generated.exit_code == 0, generated.output
        output = tmp_path / "report.json"
        result = _campaign(runner, and_oracle_file, output, "--tests", str(tests))
        summary = json.loads(output.read_text())["summary"]
        assert summary["suite"] == "alternative"
        assert "ALT" in summary["columns"]
        assert result.exit_code in (0, 3)

    def test_fingerprint_mismatch_exits_2(
        self, runner, tmp_path, example_oracle_file, and_oracle_file
    ):
        tests = tmp_path / "tests.json"
        runner.invoke(cli, ["gen-tests", example_oracle_file, str(tests)])
        output = tmp_path / "report.json"
        result = _campaign(runner, and_oracle_file, output, "--tests", str(tests))
        assert result.exit_code == 2
        assert "CampaignError" in result.output
        assert not output.exists()

    @pytest.mark.parametrize(
        "args",
        [
            ["--fault", "pauli:q:w0:q0"],
            ["--models", "pauli,leakage"],
            ["--p", "1.5"],
            ["--sweep", "0"],
        ],
        ids=["fault", "models", "probability", "sweep"],
    )
    def test_bad_input_exits_2(self, runner, tmp_path, and_oracle_file, args):
        result = _campaign(runner, and_oracle_file, tmp_path / "r.json", *args)
        assert result.exit_code == 2

    @pytest.mark.parametrize(
        "fault,site",
        [
            ("pauli:x:w9:q0", "w9:q0"),
            ("pauli:x:w0:q7", "w0:q7"),
            ("init:q9", "init:q9"),
            ("measure:1:q3", "measure:q3"),
        ],
        ids=["boundary", "wire_qubit", "init_qubit", "measure_qubit"],
    )
    def test_fault_outside_oracle_exits_2(
        self, runner, tmp_path, and_oracle_file, fault, site
    ):
        output = tmp_path / "r.json"
        result = _campaign(runner, and_oracle_file, output, "--fault", fault)
        assert result.exit_code == 2
        assert "LocationInvalidError" in result.output
        assert site in result.output
        assert not output.exists()

    def test_fault_on_last_boundary_accepted(self, runner, tmp_path, and_oracle_file):
        result = _campaign(
            runner, and_oracle_file, tmp_path / "r.json", "--fault", "pauli:x:w1:q2"
        )
        assert result.exit_code in (0, 3)
        assert (tmp_path / "r.json").exists()

    def test_config_file(self, runner, tmp_path, write_file, and_oracle_file):
        config = write_file(
            "campaign.yaml",
            "models: [init, measure]\nmulti_fault:\n  n_faults: 1\n  trials: 3\n",
        )
        output = tmp_path / "report.json"
        _campaign(runner, and_oracle_file, output, "--config", config)
        document = json.loads(output.read_text())
        faults = {record["fault"].split(":")[0] for record in document["records"]}
        assert faults == {"init", "measure"}
        assert document["multi_fault"]["trials"] == 3

    def test_seed_from_env(self, runner, tmp_path, and_oracle_file):
        output = tmp_path / "report.json"
        result = _campaign(
            runner,
            and_oracle_file,
            output,
            "--multi-fault",
            "1",
            "--trials",
            "2",
            env={"QBIST_SEED": "5"},
        )
        assert result.exit_code == 0, result.output
        assert json.loads(output.read_text())["multi_fault"]["seed"] == 5


class TestReportCommand:
    def test_renders(self, runner, tmp_path, example_oracle_file):
        output = tmp_path / "report.json"
        _campaign(runner, example_oracle_file, output)
        result = runner.invoke(cli, ["report", str(output), "--check"])
        assert result.exit_code == 0, result.output
        assert "QBIST32 stage: 2 k-CN, 0 X" in result.output

    def test_check_fails_on_missing_cells(self, runner, tmp_path, and_oracle_file):
        output = tmp_path / "report.json"
        _campaign(runner, and_oracle_file, output, "--fault", "pauli:z:w0:q0")
        assert runner.invoke(cli, ["report", str(output)]).exit_code == 0
        result = runner.invoke(cli, ["report", str(output), "--check"])
        assert result.exit_code == 3
        assert "not full" in result.output

    def test_malformed_report_exits_2(self, runner, write_file):
        result = runner.invoke(cli, ["report", write_file("r.json", "{}")])
        assert result.exit_code == 2


class TestCommandConfig:
    def test_cli_beats_env(self, monkeypatch):
        monkeypatch.setenv("QBIST_SEED", "5")
        assert resolve_command_config("campaign", seed=2).seed == 2

    def test_env_beats_defaults(self, monkeypatch):
        monkeypatch.setenv("QBIST_SEED", "5")
        config = resolve_command_config("campaign", defaults={"seed": 8})
        assert config.seed == 5

    def test_defaults_beat_builtin(self, monkeypatch):
        monkeypatch.delenv("QBIST_SEED", raising=False)
        monkeypatch.delenv("QBIST_TOLERANCE", raising=False)
        config = resolve_command_config("campaign", defaults={"seed": 8})
        assert config.seed == 8
        assert config.tolerance is None

    def test_tolerance_from_env(self, monkeypatch):
        monkeypatch.setenv("QBIST_TOLERANCE", "1e-6")
        assert resolve_command_config("esop").tolerance == 1e-6


def test_merge_config_skips_unset_flags():
    base = CampaignConfig(suite="alternative", seed=4)
    merged = merge_config(base, suite=None, probability=0.5, seed=None)
    assert merged.suite == "alternative"
    assert merged.probability == 0.5
    assert merged.seed == 4
