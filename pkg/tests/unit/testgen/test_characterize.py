import itertools

import pytest

from qbist.circuit import Gate, GateKind
from qbist.sim import FaultSpec
from qbist.testgen import characterize_gate

CASE_NAMES = [
    "v0",
    "v1",
    "v2",
    "v3",
    "q1-act+",
    "q1-act-",
    "q1-idle+",
    "q1-idle-",
    "q2-act+",
    "q2-act-",
    "q2-idle+",
    "q2-idle-",
]


class TestCharacterizeGate:
    @pytest.mark.parametrize("arity", [1, 2, 3, 4], ids=lambda m: f"m{m}")
    def test_fault_free_gate_passes(self, arity):
        report = characterize_gate(Gate.mcx(arity, range(arity)))
        assert report.passed
        assert [case.name for case in report.cases] == CASE_NAMES

    def test_mixed_polarity(self):
        gate = Gate.mcx(3, [(0, True), (1, False), (2, True)])
        report = characterize_gate(gate)
        assert report.passed
        assert "input 101" in report.cases[2].description

    def test_control_order_follows_reference(self):
        gate = Gate.mcx(0, [2, 1])
        reference = Gate.mcx(0, [1, 2])
        assert characterize_gate(gate, reference).passed

    def test_wrong_polarity_fails(self):
        gate = Gate.mcx(2, [(0, True), (1, True)])
        reference = Gate.mcx(2, [(0, True), (1, False)])
        report = characterize_gate(gate, reference)
        assert not report.passed
        assert {case.name for case in report.failures()} >= {"v2", "v3"}

    def test_target_phase_flip_only_breaks_quantum_cases(self):
        report = characterize_gate(
            Gate.mcx(2, [0, 1]), faults=[FaultSpec.pauli("z", 1, 2)]
        )
        failed = report.failures()
        assert failed
        assert all(case.kind == "quantum" for case in failed)

    def test_partial_fault_reports_fidelity(self):
        report = characterize_gate(
            Gate.mcx(2, [0, 1]), faults=[FaultSpec.pauli("x", 0, 2, 0.5)]
        )
        assert "p=0.5" in report.cases[0].observed

    def test_every_wire_pauli_is_caught(self):
        gate = Gate.mcx(2, [0, 1])
        for axis, boundary, qubit in itertools.product("xyz", (0, 1), range(3)):
            fault = FaultSpec.pauli(axis, boundary, qubit)
            report = characterize_gate(gate, faults=[fault])
            assert not report.passed, str(fault)

    @pytest.mark.parametrize(
        "gate,reference,message",
        [
            (Gate.single(GateKind.H, 0), None, "not an MCX"),
            (Gate.mcx(2, [0, 1]), Gate.single(GateKind.X, 2), "not an MCX"),
            (Gate.mcx(2, [0, 1]), Gate.mcx(3, [0, 1]), "different qubits"),
        ],
        ids=["hadamard", "x-reference", "qubits"],
    )
    def test_invalid(self, gate, reference, message):
        with pytest.raises(ValueError, match=message):
            characterize_gate(gate, reference)
