from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Annotated, Literal, Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from qbist.circuit import ErrorLocation, SiteKind
from qbist.exceptions import FaultSpecError
from qbist.utils.config import resolve_tolerance


@dataclass(frozen=True)
class StateVector:
    """Dense state over ``width`` qubits, qubit 0 is the most significant bit."""

    width: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (1 << self.width,):
            raise ValueError(f"expected {1 << self.width} amplitudes")
        norm = float(np.linalg.norm(self.amplitudes))
        if abs(norm - 1.0) > resolve_tolerance(None):
            raise ValueError(f"state norm {norm} is not 1")

    @classmethod
    def from_amplitudes(cls, amplitudes: np.ndarray | list[complex]) -> StateVector:
        array = np.asarray(amplitudes, dtype=np.complex128)
        return cls(width=int(array.size).bit_length() - 1, amplitudes=array)

    def amplitude(self, bits: str) -> complex:
        return complex(self.amplitudes[int(bits, 2)])

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def overlap(self, other: StateVector) -> float:
        """|<self|other>|, which is 1 for equal states up to global phase."""
        return float(abs(np.vdot(self.amplitudes, other.amplitudes)))

    def equals(self, other: StateVector, tol: float | None = None) -> bool:
        """Equality up to global phase."""
        return abs(1.0 - self.overlap(other)) <= resolve_tolerance(tol)

    def support(self, tol: float | None = None) -> list[str]:
        """Basis strings with non-negligible amplitude."""
        cutoff = resolve_tolerance(tol)
        return [
            format(i, f"0{self.width}b")
            for i in np.flatnonzero(np.abs(self.amplitudes) > cutoff)
        ]


@dataclass(frozen=True)
class Branch:
    """One member of a fault ensemble."""

    weight: float
    state: StateVector


class PauliAxis(str, Enum):
    X = "x"
    Y = "y"
    Z = "z"


class PauliFault(BaseModel):
    """Unwanted Pauli matrix placed on a wire with probability ``probability``."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["pauli"] = "pauli"
    axis: PauliAxis
    probability: float = Field(default=1.0, gt=0.0, le=1.0)


class InitBias(BaseModel):
    """Preparation that yields the wrong basis state with probability ``bias``."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["init_bias"] = "init_bias"
    bias: float = Field(default=1.0, ge=0.0, le=1.0)


class MeasureBias(BaseModel):
    """Readout that returns ``stuck`` with probability ``bias``."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["measure_bias"] = "measure_bias"
    stuck: int = Field(ge=0, le=1)
    bias: float = Field(default=1.0, ge=0.0, le=1.0)


FaultModel = Annotated[
    PauliFault | InitBias | MeasureBias, Field(discriminator="kind")
]

_SITE_FOR_MODEL = {
    "pauli": SiteKind.WIRE,
    "init_bias": SiteKind.INIT,
    "measure_bias": SiteKind.MEASURE,
}

_SPEC = re.compile(
    r"^(?:pauli:(?P<axis>[xyz]):w(?P<boundary>\d+):q(?P<pq>\d+)"
    r"(?::p=(?P<p>[\d.eE+-]+))?"
    r"|init:q(?P<iq>\d+)(?::b=(?P<ib>[\d.eE+-]+))?"
    r"|measure:(?P<stuck>[01]):q(?P<mq>\d+)(?::b=(?P<mb>[\d.eE+-]+))?)$"
)


class FaultSpec(BaseModel):
    """A fault model bound to an error location."""

    model_config = ConfigDict(frozen=True)

    location: ErrorLocation
    model: FaultModel

    @model_validator(mode="after")
    def _check_site(self) -> Self:
        expected = _SITE_FOR_MODEL[self.model.kind]
        if self.location.kind is not expected:
            raise ValueError(
                f"{self.model.kind} faults belong at {expected.value} sites, "
                f"not {self.location.kind.value}"
            )
        return self

    @classmethod
    def pauli(
        cls, axis: PauliAxis | str, boundary: int, qubit: int, probability: float = 1.0
    ) -> FaultSpec:
        return cls(
            location=ErrorLocation.wire(boundary, qubit),
            model=PauliFault(axis=PauliAxis(axis), probability=probability),
        )

    @classmethod
    def init_bias(cls, qubit: int, bias: float = 1.0) -> FaultSpec:
        return cls(location=ErrorLocation.init(qubit), model=InitBias(bias=bias))

    @classmethod
    def measure_bias(cls, qubit: int, stuck: int, bias: float = 1.0) -> FaultSpec:
        return cls(
            location=ErrorLocation.measure(qubit),
            model=MeasureBias(stuck=stuck, bias=bias),
        )

    @classmethod
    def parse(cls, text: str) -> FaultSpec:
        """Parse ``pauli:x:w3:q1[:p=0.5]``, ``init:q2[:b=1]`` or ``measure:1:q0``.

        Raises:
            FaultSpecError: If the text or the values are invalid.
        """
        match = _SPEC.match(text.strip().lower())
        if match is None:
            raise FaultSpecError(f"malformed fault spec {text!r}")
        groups = match.groupdict()
        try:
            if groups["axis"]:
                return cls.pauli(
                    groups["axis"],
                    int(groups["boundary"]),
                    int(groups["pq"]),
                    float(groups["p"] or 1.0),
                )
            if groups["iq"]:
                return cls.init_bias(int(groups["iq"]), float(groups["ib"] or 1.0))
            return cls.measure_bias(
                int(groups["mq"]), int(groups["stuck"]), float(groups["mb"] or 1.0)
            )
        except ValueError as exc:
            raise FaultSpecError(f"invalid fault spec {text!r}: {exc}") from exc

    @property
    def placement(self) -> float:
        """Probability that the fault is present."""
        if isinstance(self.model, PauliFault):
            return self.model.probability
        return self.model.bias

    def relocated(self, location: ErrorLocation) -> FaultSpec:
        return FaultSpec(location=location, model=self.model)

    def __str__(self) -> str:
        q = self.location.qubit
        match self.model:
            case PauliFault(axis=axis, probability=p):
                return f"pauli:{axis.value}:w{self.location.boundary}:q{q}:p={p:g}"
            case InitBias(bias=b):
                return f"init:q{q}:b={b:g}"
            case MeasureBias(stuck=v, bias=b):
                return f"measure:{v}:q{q}:b={b:g}"
        raise AssertionError(self.model)


class OutcomeDistribution(BaseModel):
    """Outcome label to probability.

    Computational labels are bit strings in qubit order. Bell labels read
    ``psi+:101``: the pair's Bell state, then the remaining qubits' bits.
    """

    model_config = ConfigDict(frozen=True)

    probabilities: dict[str, float]

    @model_validator(mode="after")
    def _check_total(self) -> Self:
        total = sum(self.probabilities.values())
        if abs(total - 1.0) > resolve_tolerance(None):
            raise ValueError(f"probabilities sum to {total}")
        return self

    def probability(self, label: str) -> float:
        return self.probabilities.get(label, 0.0)

    def most_likely(self) -> str:
        return max(self.probabilities, key=lambda label: self.probabilities[label])

    def is_deterministic(self, tol: float | None = None) -> bool:
        return abs(1.0 - self.probability(self.most_likely())) <= resolve_tolerance(tol)
