from qbist.boolfn import BistResidue, BooleanFunction, LiteralKind, bist_residue
from qbist.circuit import Circuit, Gate, GateKind


def hadamard_layer(width: int, qubits: range | None = None) -> Circuit:
    """One H per qubit, in qubit order."""
    qubits = range(width) if qubits is None else qubits
    return Circuit(
        width=width, gates=tuple(Gate.single(GateKind.H, q) for q in qubits)
    )


def gen_ghz_stage(
    k: int, a: int, pivot: int = 0, width: int | None = None
) -> tuple[Circuit, Circuit]:
    """GHZ preparation over the top ``k`` qubits and its inverse.

    H on ``pivot`` is followed by a CN ladder fanning out from the pivot in
    both directions. Controls are positive for ``a == 0`` and open for
    ``a == 1``, so ``|a>^k`` maps to ``(|0..0> + (-1)^a |1..1>)/sqrt(2)``.

    Args:
        k: Number of register qubits.
        a: Initial value of every register qubit.
        pivot: Qubit receiving the Hadamard.
        width: Circuit width, ``k + 1`` by default (register plus target).

    Returns:
        ``(prep, unprep)`` where ``unprep`` is the exact inverse of ``prep``.
    """
    if a not in (0, 1):
        raise ValueError(f"a must be 0 or 1, got {a}")
    if not 0 <= pivot < k:
        raise ValueError(f"pivot {pivot} outside 0..{k - 1}")
    width = k + 1 if width is None else width
    if width < k:
        raise ValueError(f"width {width} cannot hold {k} register qubits")
    positive = a == 0
    gates = [Gate.single(GateKind.H, pivot)]
    gates += [Gate.cn(q, q + 1, positive) for q in range(pivot, k - 1)]
    gates += [Gate.cn(q, q - 1, positive) for q in range(pivot, 0, -1)]
    prep = Circuit(width=width, gates=tuple(gates))
    return prep, prep.inverse()


def qbist32_gates(residue: BistResidue) -> tuple[Gate, ...]:
    """One gate per residue cube, targeting qubit ``k``.

    A cube without literals is realized as an uncontrolled X.
    """
    k = residue.esop.k
    gates = []
    for cube in residue.esop.cubes:
        controls = [
            (j, lit is LiteralKind.POSITIVE)
            for j, lit in enumerate(cube.literals)
            if lit is not LiteralKind.ABSENT
        ]
        if controls:
            gates.append(Gate.mcx(k, controls))
        else:
            gates.append(Gate.single(GateKind.X, k))
    return tuple(gates)


def synthesize_qbist32(f: BooleanFunction) -> Circuit:
    """Stage that XORs the non-affine residue of ``f`` onto the target.

    Appended after the oracle it leaves ``f ^ A`` on the target for the
    affine part ``A`` chosen by :func:`bist_residue`, so T3 ends in a product
    state.
    """
    return Circuit(width=f.k + 1, gates=qbist32_gates(bist_residue(f)))
