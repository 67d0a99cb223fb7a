"""Dense statevector evolution with fault insertion."""

from collections import defaultdict
from collections.abc import Sequence
from itertools import product
from math import prod

import numpy as np

from qbist.circuit import Circuit, ErrorLocation, Gate, GateKind
from qbist.exceptions import LocationInvalidError, WidthMismatchError
from qbist.log import logger
from qbist.utils.config import get_config

from .models import (
    Branch,
    FaultSpec,
    InitBias,
    MeasureBias,
    PauliAxis,
    PauliFault,
    StateVector,
)

_logger = logger.getChild("sim")

_SQRT_HALF = 1 / np.sqrt(2)

SINGLE_QUBIT = {
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT_HALF,
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=np.complex128),
    # i|0><1| - i|1><0|
    GateKind.Y: np.array([[0, 1j], [-1j, 0]], dtype=np.complex128),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=np.complex128),
}

PAULI = {
    PauliAxis.X: SINGLE_QUBIT[GateKind.X],
    PauliAxis.Y: SINGLE_QUBIT[GateKind.Y],
    PauliAxis.Z: SINGLE_QUBIT[GateKind.Z],
}


def prepare(width: int, basis: str) -> StateVector:
    """Computational basis state ``|basis>``."""
    if len(basis) != width or set(basis) - {"0", "1"}:
        raise ValueError(f"basis {basis!r} is not a {width}-bit string")
    cap = get_config().max_width
    if width > cap:
        raise ValueError(f"width {width} exceeds the {cap}-qubit cap")
    amplitudes = np.zeros(1 << width, dtype=np.complex128)
    amplitudes[int(basis, 2)] = 1.0
    return StateVector(width=width, amplitudes=amplitudes)


def _apply_matrix(psi: np.ndarray, matrix: np.ndarray, qubit: int) -> np.ndarray:
    return np.moveaxis(np.tensordot(matrix, psi, axes=([1], [qubit])), 0, qubit)


def _apply_gate(psi: np.ndarray, gate: Gate) -> np.ndarray:
    if gate.kind is not GateKind.MCX:
        return _apply_matrix(psi, SINGLE_QUBIT[gate.kind], gate.target)
    index: list[int | slice] = [slice(None)] * psi.ndim
    for control in gate.controls:
        index[control.qubit] = control.active_value
    low, high = list(index), list(index)
    low[gate.target], high[gate.target] = 0, 1
    out = psi.copy()
    out[tuple(low)] = psi[tuple(high)]
    out[tuple(high)] = psi[tuple(low)]
    return out


def _tensor(state: StateVector) -> np.ndarray:
    return state.amplitudes.reshape((2,) * state.width)


def _vector(psi: np.ndarray) -> StateVector:
    return StateVector(width=psi.ndim, amplitudes=psi.reshape(-1))


def apply(circuit: Circuit, state: StateVector) -> StateVector:
    """Unitary action of ``circuit`` on ``state``.

    Raises:
        WidthMismatchError: If the widths differ.
    """
    if circuit.width != state.width:
        raise WidthMismatchError(
            f"circuit width {circuit.width} != state width {state.width}"
        )
    psi = _tensor(state)
    for gate in circuit.gates:
        psi = _apply_gate(psi, gate)
    return _vector(psi)


def validate_location(circuit: Circuit, location: ErrorLocation) -> None:
    """Raise LocationInvalidError unless ``location`` exists in ``circuit``."""
    if location.qubit >= circuit.width:
        raise LocationInvalidError(
            f"{location} addresses qubit {location.qubit} of a width-{circuit.width} "
            "circuit"
        )
    boundary = location.boundary
    if boundary is not None and boundary > len(circuit):
        raise LocationInvalidError(
            f"{location} is past the last boundary {len(circuit)}"
        )


def _run_fired(
    circuit: Circuit, state: StateVector, fired: Sequence[FaultSpec]
) -> StateVector:
    psi = _tensor(state)
    inserts: dict[int, list[tuple[np.ndarray, int]]] = defaultdict(list)
    for fault in fired:
        if isinstance(fault.model, InitBias):
            psi = _apply_matrix(psi, SINGLE_QUBIT[GateKind.X], fault.location.qubit)
        elif isinstance(fault.model, PauliFault):
            inserts[fault.location.boundary].append(  # type: ignore[index]
                (PAULI[fault.model.axis], fault.location.qubit)
            )
    for boundary, gate in enumerate(circuit.gates):
        for matrix, qubit in inserts.get(boundary, ()):
            psi = _apply_matrix(psi, matrix, qubit)
        psi = _apply_gate(psi, gate)
    for matrix, qubit in inserts.get(len(circuit), ()):
        psi = _apply_matrix(psi, matrix, qubit)
    return _vector(psi)


def apply_faulty(
    circuit: Circuit, state: StateVector, faults: Sequence[FaultSpec]
) -> list[Branch]:
    """Evolve ``state`` through ``circuit`` with probabilistic faults.

    Every Pauli and init fault either fires (weight = its placement
    probability) or not (weight = 1 - placement), giving up to 2^m branches;
    zero-weight branches are dropped. Measure faults are validated here and
    applied by :func:`measure_distribution`. Init faults flip the qubit before
    the first gate; Pauli faults act at their wire boundary in list order.

    Raises:
        LocationInvalidError: If a fault location does not exist.
        WidthMismatchError: If the widths differ.
    """
    if circuit.width != state.width:
        raise WidthMismatchError(
            f"circuit width {circuit.width} != state width {state.width}"
        )
    for fault in faults:
        validate_location(circuit, fault.location)
    active = [f for f in faults if not isinstance(f.model, MeasureBias)]
    branches = []
    for pattern in product((True, False), repeat=len(active)):
        weight = prod(
            f.placement if on else 1.0 - f.placement for f, on in zip(active, pattern)
        )
        if weight <= 0.0:
            continue
        fired = [f for f, on in zip(active, pattern) if on]
        branches.append(Branch(weight=weight, state=_run_fired(circuit, state, fired)))
    _logger.debug("%d faults produced %d branches", len(active), len(branches))
    return branches
