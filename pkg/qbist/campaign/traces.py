"""Fault-free activation traces of the oracle gates inside a test."""

from collections import Counter

import numpy as np

from qbist.circuit import Circuit, Gate
from qbist.sim import StateVector, apply, prepare
from qbist.testgen import TestPlan
from qbist.utils.config import resolve_tolerance

from .models import GateTrace, PhaseEvent


def _target_mode(state: StateVector, tol: float) -> str | None:
    columns = state.amplitudes.reshape(-1, 2)
    zero, one = columns[:, 0], columns[:, 1]
    if np.allclose(one, -zero, atol=tol, rtol=0.0):
        return "minus"
    if np.allclose(one, zero, atol=tol, rtol=0.0):
        return "plus"
    return None


def _phase_events(
    gate: Gate, state: StateVector, mode: str, tol: float
) -> set[PhaseEvent]:
    k = state.width - 1
    register = state.amplitudes.reshape(-1, 2)[:, 0]
    significant = np.flatnonzero(np.abs(register) > tol)
    phase = register[significant[0]] / abs(register[significant[0]])
    signs = {}
    for x in significant:
        value = register[x] / phase
        if abs(value.imag) <= tol:
            signs[int(x)] = 1 if value.real > 0 else -1
    counts = Counter(signs.values())
    events = set()
    for x, sign in signs.items():
        activating = gate.is_activated(format(x, f"0{k}b") + "0")
        if counts[sign] >= 2:
            events.add(PhaseEvent(mode=mode, activating=activating, sign=1))
        if counts[-sign]:
            events.add(PhaseEvent(mode=mode, activating=activating, sign=-1))
    return events


def _basis_events(
    gate: Gate, state: StateVector, tol: float
) -> tuple[set[int], set[tuple[int, int]]]:
    active: set[int] = set()
    idle: set[tuple[int, int]] = set()
    target = state.width - 1
    for bits in state.support(tol):
        value = int(bits[target])
        if gate.is_activated(bits):
            active.add(value)
        idle.update(
            (c.qubit, value)
            for c in gate.controls
            if int(bits[c.qubit]) != c.active_value
        )
    return active, idle


def trace_activations(
    plan: TestPlan, oracle: Circuit, tol: float | None = None
) -> list[GateTrace]:
    """Record what every oracle gate sees in the fault-free run of ``plan``.

    With the target in |-> or |+> the gate gets phase events: whether each
    register term activates it and whether that term shares its sign with,
    or opposes, another term. Otherwise it gets basis events: target values
    present in activating terms and (control, target value) pairs where the
    control is non-activating.
    """
    tol = resolve_tolerance(tol)
    state = apply(plan.prep, prepare(plan.width, plan.init))
    traces = []
    for index, gate in enumerate(oracle.gates):
        mode = _target_mode(state, tol)
        if mode is None:
            active, idle = _basis_events(gate, state, tol)
            trace = GateTrace(
                test=plan.name,
                gate=index,
                active_targets=tuple(sorted(active)),
                idle_controls=tuple(sorted(idle)),
            )
        else:
            phases = _phase_events(gate, state, mode, tol)
            trace = GateTrace(
                test=plan.name,
                gate=index,
                phases=tuple(
                    sorted(phases, key=lambda e: (e.mode, e.activating, e.sign))
                ),
            )
        traces.append(trace)
        state = apply(Circuit(width=oracle.width, gates=(gate,)), state)
    return traces
