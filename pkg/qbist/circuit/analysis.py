from .models import Circuit, ErrorLocation, GateCensus, GateKind


def enumerate_error_locations(circuit: Circuit) -> list[ErrorLocation]:
    """Every init site, every wire site at every boundary, every measure site."""
    qubits = range(circuit.width)
    locations = [ErrorLocation.init(q) for q in qubits]
    locations += [
        ErrorLocation.wire(b, q) for b in range(len(circuit) + 1) for q in qubits
    ]
    locations += [ErrorLocation.measure(q) for q in qubits]
    return locations


def gate_census(circuit: Circuit) -> GateCensus:
    counts = {"h": 0, "cn": 0, "x": 0, "y": 0, "z": 0}
    mcx: dict[int, int] = {}
    for gate in circuit.gates:
        if gate.kind is GateKind.MCX:
            if gate.arity == 1:
                counts["cn"] += 1
            else:
                mcx[gate.arity] = mcx.get(gate.arity, 0) + 1
        else:
            counts[gate.kind.value.lower()] += 1
    return GateCensus(**counts, mcx=dict(sorted(mcx.items())))
