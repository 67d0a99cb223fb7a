"""Circuit text format.

::

    # width: 5
    # constant: 0
    # stage: p0
    MCX t=q4 c=q0+
    H q0

``+`` marks a positive control and ``-`` an open control. Blank lines and
other ``#`` comments are ignored by the parser.
"""

import re

from pydantic import ValidationError

from qbist.exceptions import CircuitParseError

from .models import Circuit, Control, Gate, GateKind, Stage

_HEADER = re.compile(r"^#\s*(width|constant|stage)\s*:\s*(.*?)\s*$")
_SINGLE = re.compile(r"^(H|X|Y|Z)\s+q(\d+)$")
_MCX = re.compile(r"^MCX\s+t=q(\d+)\s+c=(q\d+[+-](?:,q\d+[+-])*)$")
_CONTROL = re.compile(r"^q(\d+)([+-])$")


def format_gate(gate: Gate) -> str:
    if gate.kind is GateKind.MCX:
        controls = ",".join(
            f"q{c.qubit}{'+' if c.positive else '-'}" for c in gate.controls
        )
        return f"MCX t=q{gate.target} c={controls}"
    return f"{gate.kind.value} q{gate.target}"


def parse_gate(line: str, number: int = 1) -> Gate:
    """Parse one gate line.

    Raises:
        CircuitParseError: If the line is not a well-formed gate.
    """
    text = line.strip()
    try:
        if match := _SINGLE.match(text):
            return Gate.single(match.group(1), int(match.group(2)))
        if match := _MCX.match(text):
            controls = []
            for item in match.group(2).split(","):
                qubit, sign = _CONTROL.match(item).groups()  # type: ignore[union-attr]
                controls.append(Control(qubit=int(qubit), positive=sign == "+"))
            return Gate(
                kind=GateKind.MCX, target=int(match.group(1)), controls=tuple(controls)
            )
    except ValidationError as exc:
        raise CircuitParseError(number, _first_error(exc)) from exc
    raise CircuitParseError(number, f"unrecognized gate {text!r}")


def format_circuit(circuit: Circuit) -> str:
    lines = [f"# width: {circuit.width}", f"# constant: {circuit.constant}"]
    if circuit.stages:
        for stage in circuit.stages:
            lines.append(f"# stage: {stage.label}")
            gates = circuit.gates[stage.start : stage.stop]
            lines.extend(format_gate(g) for g in gates)
    else:
        lines.extend(format_gate(g) for g in circuit.gates)
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> Circuit:
    """Parse the circuit text format.

    Raises:
        CircuitParseError: With the 1-based line number of the problem.
    """
    width: int | None = None
    constant = 0
    gates: list[Gate] = []
    labels: list[tuple[str, int]] = []
    first_gate_line = 0
    last_line = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header = _HEADER.match(line)
            if header is None:
                continue
            key, value = header.groups()
            if key == "stage":
                if not value:
                    raise CircuitParseError(number, "empty stage label")
                labels.append((value, len(gates)))
            elif not value.isdigit():
                raise CircuitParseError(number, f"{key} must be a non-negative integer")
            elif key == "width":
                width = int(value)
            else:
                constant = int(value)
            continue
        gates.append(parse_gate(line, number))
        first_gate_line = first_gate_line or number

    if width is None:
        raise CircuitParseError(max(last_line, 1), "missing '# width:' header")
    if labels and labels[0][1] > 0:
        raise CircuitParseError(first_gate_line, "gate before the first stage label")

    stops = [start for _, start in labels[1:]] + [len(gates)]
    stages = tuple(
        Stage(label=label, start=start, stop=stop)
        for (label, start), stop in zip(labels, stops)
    )
    try:
        return Circuit(
            width=width, gates=tuple(gates), stages=stages, constant=constant
        )
    except ValidationError as exc:
        raise CircuitParseError(max(last_line, 1), _first_error(exc)) from exc


def _first_error(exc: ValidationError) -> str:
    return exc.errors()[0]["msg"]
