import pytest
from pydantic import ValidationError

from qbist.campaign import (
    CampaignConfig,
    CoverageMatrix,
    Grade,
    MultiFaultConfig,
    Requirement,
)


class TestGrade:
    @pytest.mark.parametrize(
        "covered,total,expected",
        [
            (4, 4, Grade.FULL),
            (1, 4, Grade.PARTIAL),
            (0, 4, Grade.NONE),
            (0, 0, Grade.NONE),
        ],
        ids=["full", "partial", "none", "empty"],
    )
    def test_of(self, covered, total, expected):
        assert Grade.of(covered, total) is expected

    def test_ordering(self):
        assert Grade.best(Grade.NONE, Grade.PARTIAL) is Grade.PARTIAL
        assert Grade.worst(Grade.FULL, Grade.PARTIAL) is Grade.PARTIAL


def test_requirement_questions():
    assert Requirement.KICKBACK.value == 4
    assert "phase kickback" in Requirement.KICKBACK.question
    assert all(requirement.question for requirement in Requirement)


class TestCoverageMatrix:
    def test_rows_must_cover_columns(self):
        with pytest.raises(ValidationError, match="every column"):
            CoverageMatrix(
                columns={"T1": ("T1",), "T2": ("T2",)},
                cells={Requirement.BIT_FLIP: {"T1": Grade.FULL}},
            )

    def test_missing(self):
        matrix = CoverageMatrix(
            columns={"T1": ("T1",)},
            cells={
                Requirement.BIT_FLIP: {"T1": Grade.FULL},
                Requirement.MEASUREMENT: {"T1": Grade.PARTIAL},
            },
        )
        required = {Requirement.MEASUREMENT: ("T1",), Requirement.BIT_FLIP: ("T1",)}
        assert matrix.missing(required) == [(Requirement.MEASUREMENT, "T1")]


class TestCampaignConfig:
    def test_defaults(self):
        config = CampaignConfig()
        assert config.suite == "standard"
        assert config.models == ("pauli", "init", "measure")
        assert config.multi_fault is None

    def test_nested_multi_fault(self):
        config = CampaignConfig.model_validate({"multi_fault": {"n_faults": 3}})
        assert config.multi_fault == MultiFaultConfig(n_faults=3, trials=100)

    @pytest.mark.parametrize(
        "fields",
        [
            {"sweep": (0.5, 1.5)},
            {"probability": 0.0},
            {"models": ("pauli", "leakage")},
            {"max_workers": 0},
            {"suite": "exhaustive"},
            {"unknown": 1},
        ],
        ids=["sweep", "probability", "models", "workers", "suite", "extra"],
    )
    def test_invalid(self, fields):
        with pytest.raises(ValidationError):
            CampaignConfig(**fields)
