from collections.abc import Sequence

from qbist.boolfn import BooleanFunction, PprmExpansion
from qbist.boolfn.models import variables
from qbist.exceptions import NonOracleCircuitError, WidthMismatchError

from .models import Circuit, Gate, GateKind, Stage


def build_oracle(p: PprmExpansion) -> Circuit:
    """Realize each PPRM product term as a positive-control MCX on the target.

    Gates follow :meth:`PprmExpansion.ordered_terms` and are labelled
    ``p0, p1, ...``. The constant is recorded on the circuit, not synthesized.
    """
    target = p.k
    gates = [
        Gate.mcx(target, [j - 1 for j in variables(mask, p.k)])
        for mask in p.ordered_terms()
    ]
    stages = tuple(Stage(label=f"p{i}", start=i, stop=i + 1) for i in range(len(gates)))
    return Circuit(
        width=p.k + 1, gates=tuple(gates), stages=stages, constant=p.constant
    )


def compose(stages: Sequence[tuple[str, Circuit]], width: int | None = None) -> Circuit:
    """Concatenate labelled circuits into one circuit with one stage per input.

    Args:
        stages: ``(label, circuit)`` pairs in execution order.
        width: Width of the result; required when ``stages`` is empty.

    Raises:
        WidthMismatchError: If the circuits (or ``width``) disagree.
    """
    widths = {c.width for _, c in stages}
    if width is not None:
        widths.add(width)
    if len(widths) != 1:
        raise WidthMismatchError(f"cannot compose widths {sorted(widths)}")
    gates: list[Gate] = []
    labelled = []
    for label, circuit in stages:
        labelled.append(
            Stage(label=label, start=len(gates), stop=len(gates) + len(circuit))
        )
        gates.extend(circuit.gates)
    return Circuit(width=widths.pop(), gates=tuple(gates), stages=tuple(labelled))


def check_oracle(circuit: Circuit) -> None:
    """Require the k-CN oracle shape: MCX gates acting on the last qubit only.

    Raises:
        NonOracleCircuitError: If any gate breaks the shape.
    """
    if circuit.width < 2:
        raise NonOracleCircuitError("an oracle needs at least one input and a target")
    for index, gate in enumerate(circuit.gates):
        if gate.kind is not GateKind.MCX:
            raise NonOracleCircuitError(f"gate {index} is {gate.kind.value}, not MCX")
        if gate.target != circuit.target:
            raise NonOracleCircuitError(
                f"gate {index} targets q{gate.target} instead of q{circuit.target}"
            )
        if any(c.qubit == circuit.target for c in gate.controls):
            raise NonOracleCircuitError(f"gate {index} uses the target as a control")


def oracle_function(circuit: Circuit) -> BooleanFunction:
    """Recover the function an oracle XORs onto its target, constant included."""
    check_oracle(circuit)
    k = circuit.k
    table = []
    for x in range(1 << k):
        bits = format(x, f"0{k}b") + "0"
        table.append(int(circuit.evaluate_classical(bits)[-1]) ^ circuit.constant)
    return BooleanFunction(k=k, table=tuple(table))
