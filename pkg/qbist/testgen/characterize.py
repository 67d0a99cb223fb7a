"""Twelve-case characterization of a single k-CN gate.

Four classical cases drive the gate with basis vectors (controls off or on,
target 0 or 1). Eight quantum cases put the controls in a uniform
superposition where one probed minterm carries the phase ``e^(+-i pi/2)``
and the target in |-> (case 1) or |+> (case 2). With a |-> target an
activating minterm picks up a -1; every other amplitude and the target
factor stay unchanged.
"""

from collections.abc import Sequence

import numpy as np

from qbist.circuit import Circuit, Control, Gate, GateKind, format_gate
from qbist.log import logger
from qbist.sim import (
    FaultSpec,
    StateVector,
    apply,
    apply_faulty,
    measure_distribution,
    prepare,
)
from qbist.utils.config import resolve_tolerance

from .models import CaseResult, CharacterizationReport

_logger = logger.getChild("characterize")

_PHI = np.pi / 2
_TARGETS = {
    "q1": ("|->", np.array([1.0, -1.0]) / np.sqrt(2)),
    "q2": ("|+>", np.array([1.0, 1.0]) / np.sqrt(2)),
}


def _localize(gate: Gate, mapping: dict[int, int]) -> Gate:
    return Gate(
        kind=gate.kind,
        target=mapping[gate.target],
        controls=tuple(
            Control(qubit=mapping[c.qubit], positive=c.positive) for c in gate.controls
        ),
    )


def _ket(state: StateVector, tol: float) -> str:
    support = state.support(tol)
    phase = state.amplitude(support[0])
    phase /= abs(phase)
    terms = []
    for bits in support:
        z = state.amplitude(bits) / phase
        if abs(z.imag) <= tol:
            coeff = f"{z.real:+.3f}"
        else:
            coeff = f"({z.real:+.3f}{z.imag:+.3f}j)"
        terms.append(f"{coeff}|{bits}>")
    return " ".join(terms)


def _classical_case(
    name: str,
    description: str,
    bits: str,
    implementation: Circuit,
    reference: Circuit,
    faults: Sequence[FaultSpec],
    tol: float,
) -> CaseResult:
    expected = reference.evaluate_classical(bits)
    ensemble = apply_faulty(implementation, prepare(len(bits), bits), faults)
    outcome = measure_distribution(ensemble, faults)
    passed = outcome.probability(expected) >= 1.0 - tol
    observed = outcome.most_likely()
    if not outcome.is_deterministic(tol):
        observed += f" (p={outcome.probability(observed):.6f})"
    return CaseResult(
        name=name,
        kind="classical",
        description=f"{description}, input {bits}",
        expected=expected,
        observed=observed,
        passed=passed,
    )


def _quantum_case(
    name: str,
    description: str,
    state: StateVector,
    implementation: Circuit,
    reference: Circuit,
    faults: Sequence[FaultSpec],
    tol: float,
) -> CaseResult:
    expected = apply(reference, state)
    ensemble = apply_faulty(implementation, state, faults)
    fidelity = sum(b.weight * expected.overlap(b.state) ** 2 for b in ensemble)
    heaviest = max(ensemble, key=lambda branch: branch.weight)
    observed = _ket(heaviest.state, tol)
    if len(ensemble) > 1:
        observed += f" (fidelity={fidelity:.6f})"
    return CaseResult(
        name=name,
        kind="quantum",
        description=description,
        expected=_ket(expected, tol),
        observed=observed,
        passed=fidelity >= 1.0 - tol,
    )


def _probe_state(m: int, probe: int, sign: int, target: np.ndarray) -> StateVector:
    register = np.full(1 << m, 2 ** (-m / 2), dtype=np.complex128)
    register[probe] *= np.exp(sign * 1j * _PHI)
    return StateVector(width=m + 1, amplitudes=np.kron(register, target))


def characterize_gate(
    gate: Gate,
    reference: Gate | None = None,
    faults: Sequence[FaultSpec] = (),
    tol: float | None = None,
) -> CharacterizationReport:
    """Run the four classical and eight quantum characteristic operations.

    The gate is checked against ``reference`` (itself by default) on a local
    circuit where the reference's controls become qubits ``0..m-1`` in order
    and its target becomes qubit ``m``. ``faults`` use that local circuit's
    locations: wire boundaries 0 and 1, qubits ``0..m``.

    Args:
        gate: The implementation under test, an MCX.
        reference: The intended gate; must act on the same qubits.
        faults: Faults injected around the implementation.
        tol: Pass threshold; a case passes when its success probability or
            fidelity is at least ``1 - tol``.

    Returns:
        A report with exactly twelve cases.

    Raises:
        ValueError: If either gate is not an MCX or the qubit sets differ.
    """
    reference = gate if reference is None else reference
    for candidate in (gate, reference):
        if candidate.kind is not GateKind.MCX:
            raise ValueError(f"{format_gate(candidate)} is not an MCX gate")
    order = [c.qubit for c in reference.controls] + [reference.target]
    if sorted(gate.qubits) != sorted(order):
        raise ValueError(
            f"{format_gate(gate)} and {format_gate(reference)} act on different qubits"
        )
    tol = resolve_tolerance(tol)
    mapping = {q: i for i, q in enumerate(order)}
    m = reference.arity
    implementation = Circuit(width=m + 1, gates=(_localize(gate, mapping),))
    intended = Circuit(width=m + 1, gates=(_localize(reference, mapping),))

    on = "".join(str(c.active_value) for c in reference.controls)
    off = "".join(str(1 - c.active_value) for c in reference.controls)
    cases = [
        _classical_case(name, text, bits, implementation, intended, faults, tol)
        for name, text, bits in (
            ("v0", "controls off, target 1", off + "1"),
            ("v1", "controls off, target 0", off + "0"),
            ("v2", "controls on, target 1", on + "1"),
            ("v3", "controls on, target 0", on + "0"),
        )
    ]
    for prefix, (target_name, target) in _TARGETS.items():
        for activity, minterm in (("act", on), ("idle", off)):
            for sign in (1, -1):
                symbol = "+" if sign > 0 else "-"
                description = (
                    f"target {target_name}, "
                    f"{'activating' if activity == 'act' else 'non-activating'} "
                    f"minterm {minterm} with phase e^({symbol}i pi/2)"
                )
                state = _probe_state(m, int(minterm, 2), sign, target)
                cases.append(
                    _quantum_case(
                        f"{prefix}-{activity}{symbol}",
                        description,
                        state,
                        implementation,
                        intended,
                        faults,
                        tol,
                    )
                )

    report = CharacterizationReport(
        gate=format_gate(gate), reference=format_gate(reference), cases=tuple(cases)
    )
    _logger.debug(
        "%s: %d/12 cases pass", report.gate, 12 - len(report.failures())
    )
    return report
