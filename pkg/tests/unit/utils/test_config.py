import pytest
from pydantic import ValidationError

from qbist.utils.config import (
    SimulationConfig,
    configure,
    get_config,
    override,
    resolve_tolerance,
)


@pytest.fixture()
def restore_config():
    with override():
        yield


class TestSimulationConfig:
    def test_defaults(self):
        config = SimulationConfig()
        assert config.tolerance == 1e-9
        assert config.max_width == 24

    @pytest.mark.parametrize(
        "fields",
        [{"tolerance": 0.0}, {"tolerance": 1.0}, {"max_width": 31}, {"seed": 1}],
        ids=["zero-tolerance", "unit-tolerance", "too-wide", "extra"],
    )
    def test_invalid(self, fields):
        with pytest.raises(ValidationError):
            SimulationConfig(**fields)


class TestOverride:
    def test_restores_previous(self):
        before = get_config()
        with override(tolerance=1e-6) as active:
            assert active.tolerance == 1e-6
            assert resolve_tolerance(None) == 1e-6
        assert get_config() == before

    def test_restores_after_error(self):
        before = get_config()
        with pytest.raises(RuntimeError):
            with override(max_width=4):
                raise RuntimeError("boom")
        assert get_config() == before

    def test_invalid_change_keeps_settings(self):
        before = get_config()
        with pytest.raises(ValidationError):
            with override(tolerance=-1.0):
                pass
        assert get_config() == before


def test_configure(restore_config):
    configure(max_width=10)
    assert get_config().max_width == 10
    assert get_config().tolerance == 1e-9


def test_explicit_tolerance_wins():
    with override(tolerance=1e-3):
        assert resolve_tolerance(1e-5) == 1e-5
