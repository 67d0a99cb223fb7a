import pytest

from qbist.circuit import Circuit, Gate, GateKind


@pytest.fixture(scope="session")
def make_layer():
    def _make_layer(width, kind=GateKind.H, qubits=None):
        qubits = range(width) if qubits is None else qubits
        return Circuit(width=width, gates=tuple(Gate.single(kind, q) for q in qubits))

    return _make_layer


@pytest.fixture(scope="session")
def bell_circuit():
    return Circuit(width=2, gates=(Gate.single(GateKind.H, 0), Gate.cn(0, 1)))


@pytest.fixture(scope="session")
def make_random_circuit():
    def _make_random_circuit(rng, width, depth):
        gates = []
        for _ in range(depth):
            if width > 1 and rng.random() < 0.4:
                order = [int(q) for q in rng.permutation(width)]
                arity = int(rng.integers(1, width))
                controls = [(q, bool(rng.integers(2))) for q in order[1 : arity + 1]]
                gates.append(Gate.mcx(order[0], controls))
            else:
                kind = ("H", "X", "Y", "Z")[int(rng.integers(4))]
                gates.append(Gate.single(kind, int(rng.integers(width))))
        return Circuit(width=width, gates=tuple(gates))

    return _make_random_circuit
