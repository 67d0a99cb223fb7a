from collections.abc import Iterable, Sequence

from qbist.circuit import Circuit, SiteKind, enumerate_error_locations
from qbist.sim import FaultSpec, PauliAxis
from qbist.testgen import TestPlan

FAULT_MODELS = ("pauli", "init", "measure")


def enumerate_single_faults(
    circuit: Circuit,
    models: Iterable[str] = FAULT_MODELS,
    probability: float = 1.0,
    bias: float = 1.0,
    sweep: Sequence[float] = (),
) -> list[FaultSpec]:
    """One fault per (location, applicable model, axis or stuck value).

    Pauli faults come at ``probability`` and again at every ``sweep``
    probability. Init and measurement faults carry ``bias``.

    Args:
        circuit: Circuit whose locations are enumerated.
        models: Any of ``pauli``, ``init`` and ``measure``.
        probability: Placement probability of Pauli faults.
        bias: Bias of init and measurement faults.
        sweep: Extra Pauli placement probabilities.

    Returns:
        Faults ordered by location (inits, wires by boundary, measures), then
        by axis or stuck value, then by probability.
    """
    chosen = set(models)
    unknown = chosen - set(FAULT_MODELS)
    if unknown:
        raise ValueError(f"unknown fault models: {sorted(unknown)}")
    probabilities = [probability] + [p for p in sweep if p != probability]
    faults = []
    for location in enumerate_error_locations(circuit):
        match location.kind:
            case SiteKind.INIT if "init" in chosen:
                faults.append(FaultSpec.init_bias(location.qubit, bias))
            case SiteKind.WIRE if "pauli" in chosen:
                boundary = location.boundary or 0
                faults.extend(
                    FaultSpec.pauli(axis, boundary, location.qubit, p)
                    for axis in PauliAxis
                    for p in probabilities
                )
            case SiteKind.MEASURE if "measure" in chosen:
                faults.extend(
                    FaultSpec.measure_bias(location.qubit, stuck, bias)
                    for stuck in (0, 1)
                )
    return faults


def qbist_faults(
    plan: TestPlan, oracle: Circuit, probability: float = 1.0
) -> list[FaultSpec]:
    """Pauli faults at plan wire sites outside the oracle, in plan coordinates."""
    span = plan.oracle_span(oracle)
    total = len(plan.prep) + len(oracle) + len(plan.post)
    return [
        FaultSpec.pauli(axis, boundary, qubit, probability)
        for boundary in range(total + 1)
        if boundary not in span
        for qubit in range(plan.width)
        for axis in PauliAxis
    ]
