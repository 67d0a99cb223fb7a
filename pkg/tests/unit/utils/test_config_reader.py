import json

import pytest
import yaml
from fsspec.implementations.memory import MemoryFileSystem
from pydantic import ValidationError

from qbist.campaign import CampaignConfig
from qbist.utils.config_reader import ConfigReader


@pytest.fixture()
def reader():
    return ConfigReader()


class TestRead:
    @pytest.mark.parametrize(
        "name,dump",
        [
            ("campaign.json", json.dumps),
            ("campaign.yaml", yaml.safe_dump),
            ("campaign.YML", yaml.safe_dump),
        ],
        ids=["json", "yaml", "yml-upper"],
    )
    def test_formats(self, tmp_path, reader, name, dump):
        settings = {"suite": "alternative", "sweep": [0.25, 0.5]}
        f = tmp_path / name
        f.write_text(dump(settings))
        assert reader.read(str(f)) == settings

    def test_empty_yaml(self, tmp_path, reader):
        f = tmp_path / "campaign.yaml"
        f.write_text("")
        assert reader.read(str(f)) == {}

    def test_unsupported_extension(self, tmp_path, reader):
        f = tmp_path / "campaign.toml"
        f.write_text("suite = 'standard'")
        with pytest.raises(ValueError, match="Unsupported extension"):
            reader.read(str(f))

    def test_top_level_must_be_mapping(self, tmp_path, reader):
        f = tmp_path / "campaign.yaml"
        f.write_text("- pauli\n- init\n")
        with pytest.raises(ValueError, match="mapping"):
            reader.read(str(f))


class TestEnvReferences:
    def test_resolved(self, tmp_path, monkeypatch, reader):
        monkeypatch.setenv("QBIST_TEST_WORKERS", "4")
        f = tmp_path / "campaign.yaml"
        f.write_text("max_workers: ${QBIST_TEST_WORKERS}\n")
        assert reader.read(str(f)) == {"max_workers": 4}

    def test_unknown_kept(self, tmp_path, monkeypatch, reader):
        monkeypatch.delenv("QBIST_TEST_MISSING", raising=False)
        f = tmp_path / "campaign.json"
        f.write_text(json.dumps({"suite": "${QBIST_TEST_MISSING}"}))
        assert reader.read(str(f))["suite"] == "${QBIST_TEST_MISSING}"

    def test_disabled(self, tmp_path, monkeypatch, reader):
        monkeypatch.setenv("QBIST_TEST_SUITE", "alternative")
        f = tmp_path / "campaign.json"
        f.write_text(json.dumps({"suite": "${QBIST_TEST_SUITE}"}))
        result = reader.read(str(f), resolve_env_vars=False)
        assert result["suite"] == "${QBIST_TEST_SUITE}"

    def test_env_file(self, tmp_path, monkeypatch):
        # teardown then removes whatever the env file sets
        monkeypatch.setenv("QBIST_TEST_SEED", "")
        monkeypatch.delenv("QBIST_TEST_SEED")
        env_file = tmp_path / "campaign.env"
        env_file.write_text("QBIST_TEST_SEED=11\n")
        f = tmp_path / "campaign.yaml"
        f.write_text("seed: ${QBIST_TEST_SEED}\n")
        assert ConfigReader(env_file=env_file).read(str(f)) == {"seed": 11}

    def test_env_file_loaded_once(self, tmp_path, mocker):
        load = mocker.patch("qbist.utils.config_reader.load_dotenv")
        env_file = tmp_path / "campaign.env"
        env_file.write_text("QBIST_TEST_SEED=11\n")
        ConfigReader(env_file=env_file)
        load.assert_called_once_with(env_file)

    def test_missing_env_file_is_skipped(self, tmp_path, mocker):
        load = mocker.patch("qbist.utils.config_reader.load_dotenv")
        ConfigReader(env_file=tmp_path / "absent.env")
        load.assert_not_called()

    def test_embedded(self, monkeypatch, reader):
        monkeypatch.setenv("QBIST_TEST_P", "0.5")
        assert reader._resolve_env_vars("p=${QBIST_TEST_P};") == "p=0.5;"


class TestReadModel:
    def test_campaign_config(self, tmp_path, reader):
        f = tmp_path / "campaign.yaml"
        f.write_text(
            "suite: alternative\n"
            "models: [pauli, measure]\n"
            "include_qbist_faults: true\n"
            "multi_fault:\n"
            "  n_faults: 3\n"
            "  trials: 40\n"
        )
        config = reader.read_model(str(f), CampaignConfig)
        assert config.suite == "alternative"
        assert config.models == ("pauli", "measure")
        assert config.include_qbist_faults
        assert config.multi_fault.trials == 40

    def test_invalid_values(self, tmp_path, reader):
        f = tmp_path / "campaign.json"
        f.write_text(json.dumps({"bias": 2.0}))
        with pytest.raises(ValidationError):
            reader.read_model(str(f), CampaignConfig)


def test_reads_through_given_filesystem():
    fs = MemoryFileSystem()
    with fs.open("/campaigns/sweep.yaml", "w") as handle:
        handle.write("sweep: [0.1, 0.2]\n")
    reader = ConfigReader(fs=fs)
    assert reader.read_model("/campaigns/sweep.yaml", CampaignConfig).sweep == (
        0.1,
        0.2,
    )
