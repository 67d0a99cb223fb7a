import pytest
from click.testing import CliRunner

from tools.cli import cli


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def write_file(tmp_path):
    def _write_file(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write_file


@pytest.fixture()
def example_table_file(write_file):
    return write_file("example.tt", "# running example\nk=4\ntt=8334\n")


@pytest.fixture()
def bell_circuit_file(write_file):
    return write_file("bell.circuit", "# width: 2\nH q0\nMCX t=q1 c=q0+\n")


@pytest.fixture()
def make_oracle_file(runner, tmp_path, write_file):
    def _make_oracle_file(table, name="oracle"):
        oracle = str(tmp_path / f"{name}.circuit")
        result = runner.invoke(cli, ["synth", write_file(f"{name}.tt", table), oracle])
        assert result.exit_code == 0, result.output
        return oracle

    return _make_oracle_file


@pytest.fixture()
def example_oracle_file(make_oracle_file):
    return make_oracle_file("k=4\ntt=8334\n", "example")
