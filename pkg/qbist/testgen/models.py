from __future__ import annotations

from typing import Any, ClassVar, Literal, Self

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_serializer,
    field_validator,
    model_validator,
)

from qbist.circuit import Circuit, compose, format_circuit, parse_circuit
from qbist.sim import FaultSpec

ORACLE_LABEL = "oracle"


class Measurement(BaseModel):
    """Computational readout, optionally with one pair in the Bell basis."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["computational", "bell"] = "computational"
    pair: tuple[int, int] | None = None

    @model_validator(mode="after")
    def _check_pair(self) -> Self:
        if (self.kind == "bell") != (self.pair is not None):
            raise ValueError("a pair is required exactly for Bell measurements")
        if self.pair is not None and self.pair[0] == self.pair[1]:
            raise ValueError("Bell pair qubits must differ")
        return self


def _circuit_from_text(value: Any) -> Any:
    return parse_circuit(value) if isinstance(value, str) else value


class TestPlan(BaseModel):
    """One experiment: ``init`` -> prep -> oracle under test -> post -> readout."""

    __test__: ClassVar[bool] = False
    model_config = ConfigDict(frozen=True)

    name: str = Field(description="T1..T6 or ALT-i")
    init: str = Field(pattern=r"^[01]+$", description="Initial basis string")
    prep: Circuit
    post: Circuit
    prep_label: str = "prep"
    post_label: str = "post"
    measurement: Measurement = Field(default_factory=Measurement)
    expected: str = Field(description="Deterministic fault-free outcome label")
    oracle_input: str = Field(default="", description="State entering the oracle")

    @field_validator("prep", "post", mode="before")
    @classmethod
    def _parse_circuit(cls, value: Any) -> Any:
        return _circuit_from_text(value)

    @field_serializer("prep", "post")
    def _print_circuit(self, circuit: Circuit) -> str:
        return format_circuit(circuit)

    @model_validator(mode="after")
    def _check_widths(self) -> Self:
        if not len(self.init) == self.prep.width == self.post.width:
            raise ValueError("init, prep and post must share one width")
        return self

    @property
    def width(self) -> int:
        return len(self.init)

    def circuit(self, oracle: Circuit) -> Circuit:
        """prep, oracle and post composed into one labelled circuit."""
        return compose(
            [
                (self.prep_label, self.prep),
                (ORACLE_LABEL, oracle),
                (self.post_label, self.post),
            ]
        )

    def oracle_span(self, oracle: Circuit) -> range:
        """Wire boundaries of the composed circuit that belong to the oracle."""
        return range(len(self.prep), len(self.prep) + len(oracle) + 1)

    def locate(self, fault: FaultSpec) -> FaultSpec:
        """Map an oracle-local fault into composed-circuit coordinates."""
        return fault.relocated(fault.location.shifted(len(self.prep)))

    def measured_bits(self) -> dict[int, str]:
        """Expected computational readout per qubit (Bell pairs excluded)."""
        if self.measurement.pair is None:
            return dict(enumerate(self.expected))
        rest = self.expected.split(":", 1)[1]
        qubits = [q for q in range(self.width) if q not in self.measurement.pair]
        return dict(zip(qubits, rest))


class TestSuite(BaseModel):
    """Plans generated for one oracle."""

    __test__: ClassVar[bool] = False
    model_config = ConfigDict(frozen=True)

    suite: Literal["standard", "alternative"]
    k: int = Field(ge=1)
    oracle_fingerprint: str
    plans: tuple[TestPlan, ...]

    def plan(self, name: str) -> TestPlan:
        for plan in self.plans:
            if plan.name == name:
                return plan
        raise KeyError(name)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> TestSuite:
        return cls.model_validate_json(text)


class CaseResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    kind: Literal["classical", "quantum"]
    description: str
    expected: str
    observed: str
    passed: bool


class CharacterizationReport(BaseModel):
    """Outcome of the twelve characteristic k-CN gate operations."""

    model_config = ConfigDict(frozen=True)

    gate: str
    reference: str
    cases: tuple[CaseResult, ...] = Field(min_length=12, max_length=12)

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    def failures(self) -> list[CaseResult]:
        return [case for case in self.cases if not case.passed]
