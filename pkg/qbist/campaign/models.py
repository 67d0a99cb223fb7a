from __future__ import annotations

from enum import Enum, IntEnum
from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from qbist.circuit import GateCensus
from qbist.sim import FaultSpec


class Requirement(IntEnum):
    """Testability requirements, numbered as in the coverage table."""

    BIT_FLIP = 1
    PHASE_FLIP = 2
    INITIALIZATION = 3
    KICKBACK = 4
    LOST_PHASE = 5
    CONTROLS = 6
    TARGET_BASIS = 7
    MEASUREMENT = 8

    @property
    def question(self) -> str:
        return _QUESTIONS[self]


_QUESTIONS = {
    Requirement.BIT_FLIP: "Any sigma-x or sigma-y bit flips occurring?",
    Requirement.PHASE_FLIP: "Any sigma-z phase flips occurring?",
    Requirement.INITIALIZATION: "Is initialization into |0> and |1> O.K.?",
    Requirement.KICKBACK: "With |-> at target is phase kickback O.K.?",
    Requirement.LOST_PHASE: "Any phase problems with |+> at the target?",
    Requirement.CONTROLS: "Are the controls activated with |0> and |1>?",
    Requirement.TARGET_BASIS: "Gate acts on basis |0> and |1> O.K.?",
    Requirement.MEASUREMENT: "Is measurement in |0> and |1> O.K.?",
}


class Grade(str, Enum):
    FULL = "full"
    PARTIAL = "partial"
    NONE = "none"

    @property
    def rank(self) -> int:
        return {Grade.NONE: 0, Grade.PARTIAL: 1, Grade.FULL: 2}[self]

    @classmethod
    def of(cls, covered: int, total: int) -> Grade:
        """Grade a coverage count: all items, some items, or nothing."""
        if total and covered == total:
            return cls.FULL
        return cls.PARTIAL if covered else cls.NONE

    @classmethod
    def best(cls, *grades: Grade) -> Grade:
        return max(grades, key=lambda grade: grade.rank)

    @classmethod
    def worst(cls, *grades: Grade) -> Grade:
        return min(grades, key=lambda grade: grade.rank)


class DetectionRecord(BaseModel):
    """Exact detection probability of one fault under one test.

    Oracle faults keep oracle-local coordinates so records of different
    tests line up; faults inside QBIST stages are in plan coordinates.
    """

    model_config = ConfigDict(frozen=True)

    fault: FaultSpec
    test: str
    probability: float = Field(ge=0.0, le=1.0)
    deterministic: bool = Field(
        description="Detection probability equals the placement probability"
    )
    in_qbist: bool = False

    @field_validator("probability", mode="before")
    @classmethod
    def _clip(cls, value: float) -> float:
        # Absorbs floating-point noise just outside [0, 1].
        if -1e-9 <= value < 0.0:
            return 0.0
        if 1.0 < value <= 1.0 + 1e-9:
            return 1.0
        return value

    @property
    def key(self) -> str:
        """Fault identity shared across tests; QBIST faults stay per test."""
        return f"{self.test}/{self.fault}" if self.in_qbist else str(self.fault)


class PhaseEvent(BaseModel):
    """A gate seen with its target in |-> or |+> acting on a register term.

    ``sign`` is +1 when another term carries the same sign and -1 when
    another term carries the opposite sign.
    """

    model_config = ConfigDict(frozen=True)

    mode: Literal["minus", "plus"]
    activating: bool
    sign: Literal[1, -1]


class GateTrace(BaseModel):
    """What one oracle gate saw during one fault-free test."""

    model_config = ConfigDict(frozen=True)

    test: str
    gate: int = Field(ge=0, description="Index in the oracle gate list")
    active_targets: tuple[int, ...] = Field(
        default=(), description="Target basis values present when activated"
    )
    idle_controls: tuple[tuple[int, int], ...] = Field(
        default=(), description="(control qubit, target value) seen non-activating"
    )
    phases: tuple[PhaseEvent, ...] = ()


class CoverageMatrix(BaseModel):
    """Requirement x test grades with the records that support them."""

    model_config = ConfigDict(frozen=True)

    columns: dict[str, tuple[str, ...]] = Field(
        description="Column name to the tests it unites"
    )
    cells: dict[Requirement, dict[str, Grade]]
    records: tuple[DetectionRecord, ...] = ()

    @model_validator(mode="after")
    def _check_cells(self) -> Self:
        for requirement, row in self.cells.items():
            if set(row) != set(self.columns):
                raise ValueError(f"row {requirement.value} does not cover every column")
        return self

    def grade(self, requirement: Requirement, column: str) -> Grade:
        return self.cells[requirement][column]

    def missing(
        self, required: dict[Requirement, tuple[str, ...]]
    ) -> list[tuple[Requirement, str]]:
        """Required cells that are not graded full."""
        return [
            (requirement, column)
            for requirement, columns in sorted(required.items())
            for column in columns
            if self.cells[requirement][column] is not Grade.FULL
        ]

    def as_table(self) -> dict[str, dict[str, str]]:
        return {
            str(requirement.value): {
                column: self.cells[requirement][column].value for column in self.columns
            }
            for requirement in sorted(self.cells)
        }


class FormulaCheck(BaseModel):
    """Measured added-gate census against a closed-form count."""

    model_config = ConfigDict(frozen=True)

    scope: str
    formula: str
    expected_cn: int
    expected_h: int
    measured: GateCensus

    @property
    def matches(self) -> bool:
        measured = self.measured
        return measured.cn == self.expected_cn and measured.h == self.expected_h


class ComplexityReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    census: dict[str, GateCensus] = Field(description="Added gates per test")
    checks: tuple[FormulaCheck, ...]
    qbist32: GateCensus
    experiments: dict[str, int]
    classical_bound: str = Field(description="k + 4 + 2 n_e, symbolic without n_e")
    n_e: int | None = None

    @property
    def mismatches(self) -> list[str]:
        return [
            f"{check.scope}: measured {check.measured.cn} CN + {check.measured.h} H, "
            f"formula {check.formula} gives {check.expected_cn} CN + "
            f"{check.expected_h} H"
            for check in self.checks
            if not check.matches
        ]


class MultiFaultConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    n_faults: int = Field(default=2, ge=1)
    trials: int = Field(default=100, ge=1)


class MultiFaultReport(BaseModel):
    """Monte-Carlo experiment on simultaneous Pauli faults.

    Supports but does not prove that multiple faults accumulate: placements
    whose Pauli products cancel to the identity are counted separately.
    """

    model_config = ConfigDict(frozen=True)

    n_faults: int
    trials: int
    seed: int
    detected: int
    cancelled: int
    undetected: tuple[tuple[str, ...], ...] = ()

    @property
    def effective_trials(self) -> int:
        return self.trials - self.cancelled

    @property
    def fraction(self) -> float:
        """Share of non-cancelling placements detected by the suite."""
        if not self.effective_trials:
            return 1.0
        return self.detected / self.effective_trials


class CampaignConfig(BaseModel):
    """Campaign settings, loadable from YAML or JSON."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    suite: Literal["standard", "alternative"] = "standard"
    models: tuple[Literal["pauli", "init", "measure"], ...] = Field(
        default=("pauli", "init", "measure"),
        description="Fault model families to enumerate",
    )
    probability: float = Field(
        default=1.0, gt=0.0, le=1.0, description="Pauli placement probability"
    )
    sweep: tuple[float, ...] = Field(
        default=(), description="Extra Pauli placement probabilities"
    )
    bias: float = Field(
        default=1.0, gt=0.0, le=1.0, description="Init and measurement bias"
    )
    include_qbist_faults: bool = False
    n_e: int | None = Field(default=None, ge=0)
    seed: int = 0
    max_workers: int = Field(default=1, ge=1)
    multi_fault: MultiFaultConfig | None = None

    @field_validator("sweep")
    @classmethod
    def _check_sweep(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if any(not 0.0 < p <= 1.0 for p in value):
            raise ValueError("sweep probabilities must lie in (0, 1]")
        return value
