import pytest

from qbist.campaign import (
    ALL_COLUMN,
    ALT_COLUMN,
    CampaignConfig,
    CampaignRunner,
    Grade,
    Requirement,
    plan_columns,
    required_cells,
    run_campaign,
    union_name,
)
from qbist.exceptions import CampaignError
from qbist.sim import FaultSpec
from qbist.testgen import build_suite

STANDARD_COLUMNS = [
    "T1",
    "T2",
    "T3",
    "T4",
    "T5",
    "T6",
    "T1∪T2",
    "T3∪T4",
    "T5∪T6",
    "ALL",
]


class TestColumns:
    def test_standard(self, example_suite):
        columns = plan_columns(example_suite.plans)
        assert list(columns) == STANDARD_COLUMNS
        assert columns["T3∪T4"] == ("T3", "T4")
        assert len(columns[ALL_COLUMN]) == 6

    def test_alternative(self, example_oracle):
        plans = build_suite(example_oracle, suite="alternative").plans
        columns = plan_columns(plans)
        assert "T3∪T4" not in columns
        assert columns[ALT_COLUMN] == tuple(f"ALT-{i}" for i in range(1, 10))

    def test_union_name(self):
        assert union_name(("T1", "T2")) == "T1∪T2"


class TestRequiredCells:
    def test_standard(self):
        cells = required_cells("standard")
        assert cells[Requirement.BIT_FLIP] == ("T1", "T2", "T1∪T2")
        assert cells[Requirement.INITIALIZATION] == ("T1∪T2", "T3∪T4")
        assert cells[Requirement.KICKBACK] == ("T3∪T4",)
        assert cells[Requirement.MEASUREMENT] == ("T1∪T2",)

    def test_alternative(self):
        cells = required_cells("alternative")
        assert cells[Requirement.INITIALIZATION] == ("T1∪T2",)
        assert cells[Requirement.KICKBACK] == (ALL_COLUMN,)
        assert cells[Requirement.PHASE_FLIP] == ("T5", "T6", "T5∪T6")


class TestStandardCampaign:
    def test_every_required_cell_is_full(self, example_matrix):
        assert example_matrix.missing(required_cells("standard")) == []

    def test_bit_flips_escape_hadamard_tests(self, example_matrix):
        assert example_matrix.grade(Requirement.BIT_FLIP, "T5") is not Grade.FULL

    def test_records_cover_every_pair(self, example_matrix):
        assert len(example_matrix.records) == 6 * 135
        assert not any(record.in_qbist for record in example_matrix.records)

    def test_table(self, example_matrix):
        table = example_matrix.as_table()
        assert list(table) == [str(r.value) for r in Requirement]
        assert table["1"]["T1∪T2"] == "full"

    @pytest.mark.slow
    def test_every_three_variable_oracle_catches_every_pauli(self, make_oracle):
        required = required_cells("standard")
        flips = {
            requirement: required[requirement]
            for requirement in (Requirement.BIT_FLIP, Requirement.PHASE_FLIP)
        }
        config = CampaignConfig(models=("pauli",))
        for value in range(256):
            minterms = [i for i in range(8) if value >> i & 1]
            matrix = run_campaign(make_oracle(3, minterms), config=config)
            assert matrix.missing(flips) == [], minterms
            best: dict[str, float] = {}
            for record in matrix.records:
                best[record.key] = max(best.get(record.key, 0.0), record.probability)
            assert min(best.values()) == pytest.approx(1.0), minterms

    def test_structural_grades_without_faults(self, example_oracle):
        matrix = run_campaign(example_oracle, faults=[])
        assert matrix.grade(Requirement.INITIALIZATION, "T1∪T2") is Grade.FULL
        assert matrix.grade(Requirement.CONTROLS, "T1∪T2") is Grade.FULL
        assert matrix.grade(Requirement.BIT_FLIP, "T1") is Grade.NONE
        assert matrix.grade(Requirement.KICKBACK, "T3∪T4") is Grade.NONE

    def test_partial_fault_graded_against_its_placement(self, example_oracle):
        faults = [FaultSpec.parse("pauli:x:w0:q0:p=0.5")]
        matrix = run_campaign(example_oracle, faults=faults)
        assert matrix.grade(Requirement.BIT_FLIP, "T1") is Grade.FULL
        assert matrix.grade(Requirement.BIT_FLIP, "T5") is Grade.NONE


class TestAlternativeCampaign:
    def test_shared_rows_are_full(self, example_oracle):
        matrix = run_campaign(example_oracle, suite="alternative")
        required = required_cells("alternative")
        missing = matrix.missing(
            {r: cells for r, cells in required.items() if r is not Requirement.KICKBACK}
        )
        assert missing == []
        assert matrix.grade(Requirement.KICKBACK, ALL_COLUMN) is not Grade.NONE


class TestCampaignRunner:
    def test_needs_plans(self, example_oracle):
        with pytest.raises(CampaignError, match="at least one"):
            CampaignRunner(example_oracle, [])

    def test_width_mismatch(self, make_oracle, example_suite):
        with pytest.raises(CampaignError, match="do not fit"):
            CampaignRunner(make_oracle(2, [3]), example_suite.plans)

    def test_workers_do_not_change_records(self, make_oracle):
        oracle = make_oracle(2, [3])
        plans = build_suite(oracle).plans
        serial = CampaignRunner(oracle, plans).run()
        threaded = CampaignRunner(
            oracle, plans, CampaignConfig(max_workers=4)
        ).run()
        assert threaded == serial

    def test_model_selection(self, make_matrix):
        matrix = make_matrix(models=("init",))
        assert {type(r.fault.model).__name__ for r in matrix.records} == {"InitBias"}

    def test_qbist_faults(self, make_matrix):
        matrix = make_matrix(include_qbist_faults=True)
        inside = [record for record in matrix.records if record.in_qbist]
        assert inside
        assert all("/" in record.key for record in inside)
