from __future__ import annotations

from collections.abc import Iterable
from enum import Enum
from typing import Self

import xxhash
from pydantic import BaseModel, ConfigDict, Field, model_validator


class GateKind(str, Enum):
    MCX = "MCX"
    H = "H"
    X = "X"
    Y = "Y"
    Z = "Z"


class Control(BaseModel):
    """A control node; ``positive=False`` is an open control activated by |0>."""

    model_config = ConfigDict(frozen=True)

    qubit: int = Field(ge=0)
    positive: bool = True

    @property
    def active_value(self) -> int:
        return int(self.positive)


class Gate(BaseModel):
    """Multi-controlled X with per-control polarity, or a single-qubit gate."""

    model_config = ConfigDict(frozen=True)

    kind: GateKind
    target: int = Field(ge=0, description="Target qubit, or the acted-on qubit")
    controls: tuple[Control, ...] = ()

    @model_validator(mode="after")
    def _check_controls(self) -> Self:
        if self.kind is GateKind.MCX:
            if not self.controls:
                raise ValueError("MCX needs at least one control")
        elif self.controls:
            raise ValueError(f"{self.kind.value} gate takes no controls")
        qubits = [c.qubit for c in self.controls]
        if len(set(qubits)) != len(qubits):
            raise ValueError("control qubits must be distinct")
        if self.target in qubits:
            raise ValueError("target cannot also be a control")
        return self

    @classmethod
    def mcx(cls, target: int, controls: Iterable[tuple[int, bool] | int]) -> Gate:
        """Build an MCX; bare integers are positive controls."""
        nodes = [
            Control(qubit=c)
            if isinstance(c, int)
            else Control(qubit=c[0], positive=c[1])
            for c in controls
        ]
        return cls(kind=GateKind.MCX, target=target, controls=tuple(nodes))

    @classmethod
    def cn(cls, control: int, target: int, positive: bool = True) -> Gate:
        return cls.mcx(target, [(control, positive)])

    @classmethod
    def single(cls, kind: GateKind | str, qubit: int) -> Gate:
        return cls(kind=GateKind(kind), target=qubit)

    @property
    def arity(self) -> int:
        return len(self.controls)

    @property
    def qubits(self) -> tuple[int, ...]:
        return tuple(c.qubit for c in self.controls) + (self.target,)

    def is_activated(self, bits: str) -> bool:
        """Whether every control is satisfied by the basis string ``bits``."""
        return all(int(bits[c.qubit]) == c.active_value for c in self.controls)


class Stage(BaseModel):
    """Half-open gate range ``[start, stop)`` carrying a report label."""

    model_config = ConfigDict(frozen=True)

    label: str = Field(min_length=1)
    start: int = Field(ge=0)
    stop: int = Field(ge=0)


class Circuit(BaseModel):
    """Ordered gate list over ``width`` qubits.

    For oracles, qubits ``0..k-1`` hold x1..xk and qubit ``k`` is the target.
    ``stages`` is either empty or a contiguous partition of the gate list.
    """

    model_config = ConfigDict(frozen=True)

    width: int = Field(ge=1)
    gates: tuple[Gate, ...] = ()
    stages: tuple[Stage, ...] = ()
    constant: int = Field(
        default=0, ge=0, le=1, description="PPRM constant, not synthesized"
    )

    @model_validator(mode="after")
    def _check_layout(self) -> Self:
        for index, gate in enumerate(self.gates):
            if max(gate.qubits) >= self.width:
                raise ValueError(
                    f"gate {index} addresses a qubit >= width {self.width}"
                )
        if self.stages:
            position = 0
            for stage in self.stages:
                if stage.start != position or stage.stop < stage.start:
                    raise ValueError("stages must partition the gate list in order")
                position = stage.stop
            if position != len(self.gates):
                raise ValueError("stages must cover every gate")
        return self

    def __len__(self) -> int:
        return len(self.gates)

    @property
    def target(self) -> int:
        return self.width - 1

    @property
    def k(self) -> int:
        return self.width - 1

    def stage_of(self, index: int) -> str | None:
        if not 0 <= index < len(self.gates):
            raise IndexError(index)
        for stage in self.stages:
            if stage.start <= index < stage.stop:
                return stage.label
        return None

    def slice(self, start: int, stop: int) -> Circuit:
        """Sub-circuit of gates ``[start, stop)`` without stage labels."""
        return Circuit(width=self.width, gates=self.gates[start:stop])

    def inverse(self) -> Circuit:
        """Reverse the gate order; every supported gate is self-inverse."""
        stages = tuple(
            Stage(label=s.label, start=len(self) - s.stop, stop=len(self) - s.start)
            for s in reversed(self.stages)
        )
        return Circuit(
            width=self.width,
            gates=tuple(reversed(self.gates)),
            stages=stages,
            constant=self.constant,
        )

    def evaluate_classical(self, bits: str) -> str:
        """Run a classical reversible circuit on a basis string.

        Raises:
            ValueError: If the circuit contains H, Y or Z gates.
        """
        if len(bits) != self.width:
            raise ValueError(f"expected {self.width} bits, got {len(bits)}")
        state = list(bits)
        for gate in self.gates:
            if gate.kind is GateKind.X:
                state[gate.target] = "1" if state[gate.target] == "0" else "0"
            elif gate.kind is GateKind.MCX:
                if gate.is_activated("".join(state)):
                    state[gate.target] = "1" if state[gate.target] == "0" else "0"
            else:
                raise ValueError(f"{gate.kind.value} gate is not classical")
        return "".join(state)

    def fingerprint(self) -> str:
        """Stable xxhash64 digest of the circuit text."""
        from .textio import format_circuit

        return xxhash.xxh64(format_circuit(self).encode()).hexdigest()


class SiteKind(str, Enum):
    WIRE = "wire"
    INIT = "init"
    MEASURE = "measure"


class ErrorLocation(BaseModel):
    """Place where a fault may occur.

    Wire sites sit at gate-list boundary ``boundary`` (0 is before the first
    gate, ``len(gates)`` after the last). Init and measure sites have no
    boundary.
    """

    model_config = ConfigDict(frozen=True)

    kind: SiteKind
    qubit: int = Field(ge=0)
    boundary: int | None = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _check_boundary(self) -> Self:
        if (self.kind is SiteKind.WIRE) != (self.boundary is not None):
            raise ValueError("exactly wire sites carry a boundary")
        return self

    @classmethod
    def wire(cls, boundary: int, qubit: int) -> ErrorLocation:
        return cls(kind=SiteKind.WIRE, boundary=boundary, qubit=qubit)

    @classmethod
    def init(cls, qubit: int) -> ErrorLocation:
        return cls(kind=SiteKind.INIT, qubit=qubit)

    @classmethod
    def measure(cls, qubit: int) -> ErrorLocation:
        return cls(kind=SiteKind.MEASURE, qubit=qubit)

    def shifted(self, offset: int) -> ErrorLocation:
        """Move a wire site by ``offset`` boundaries; other sites are unchanged."""
        if self.boundary is None:
            return self
        return ErrorLocation.wire(self.boundary + offset, self.qubit)

    def __str__(self) -> str:
        if self.kind is SiteKind.WIRE:
            return f"w{self.boundary}:q{self.qubit}"
        return f"{self.kind.value}:q{self.qubit}"


class GateCensus(BaseModel):
    """Gate counts by kind; ``mcx`` maps control arity (>= 2) to count."""

    model_config = ConfigDict(frozen=True)

    h: int = 0
    cn: int = 0
    x: int = 0
    y: int = 0
    z: int = 0
    mcx: dict[int, int] = Field(default_factory=dict)

    @property
    def total(self) -> int:
        return self.h + self.cn + self.x + self.y + self.z + sum(self.mcx.values())

    def __add__(self, other: GateCensus) -> GateCensus:
        arities = sorted(set(self.mcx) | set(other.mcx))
        return GateCensus(
            h=self.h + other.h,
            cn=self.cn + other.cn,
            x=self.x + other.x,
            y=self.y + other.y,
            z=self.z + other.z,
            mcx={a: self.mcx.get(a, 0) + other.mcx.get(a, 0) for a in arities},
        )
