"""Exact simulation of a circuit with injected faults."""

from __future__ import annotations

import json

import click
from rich.table import Table

from qbist.sim import FaultSpec, apply_faulty, measure_distribution, prepare
from qbist.utils.config import get_config
from tools.core.console import console
from tools.core.io import input_errors, load_circuit, write_atomic


def parse_pair(
    ctx: click.Context, param: click.Parameter, value: str | None
) -> tuple[int, int] | None:
    """Parse ``a,b`` into a qubit pair."""
    if value is None:
        return None
    try:
        a, b = (int(part) for part in value.split(","))
    except ValueError as exc:
        raise click.BadParameter(
            f"expected two qubit indices 'a,b', got {value!r}"
        ) from exc
    return a, b


@click.command()
@click.argument("circuit_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--init", "init", required=True, help="Basis input, qubit 0 first")
@click.option(
    "--fault",
    "faults",
    multiple=True,
    help="Fault spec, e.g. pauli:x:w3:q1:p=0.5, init:q2 or measure:1:q0",
)
@click.option("--bell", callback=parse_pair, help="Bell-measure qubit pair 'a,b'")
@click.option(
    "--output", "-o", type=click.Path(dir_okay=False), help="Save outcomes as JSON"
)
def simulate(
    circuit_file: str,
    init: str,
    faults: tuple[str, ...],
    bell: tuple[int, int] | None,
    output: str | None,
):
    """Print the exact outcome distribution of a circuit.

    CIRCUIT_FILE: Circuit text
    """
    with input_errors():
        circuit = load_circuit(circuit_file)
        specs = [FaultSpec.parse(text) for text in faults]
        state = prepare(circuit.width, init)
        ensemble = apply_faulty(circuit, state, specs)
        outcome = measure_distribution(ensemble, specs, bell)

    tol = get_config().tolerance
    shown = {
        label: p for label, p in sorted(outcome.probabilities.items()) if p > tol
    }
    table = Table(title=f"Outcomes from |{init}>")
    table.add_column("Outcome", style="cyan")
    table.add_column("Probability", style="magenta", justify="right")
    for label, p in shown.items():
        table.add_row(label, f"{p:.9f}")
    console.print(table)
    if outcome.is_deterministic():
        console.print(f"[green]deterministic[/green]: {outcome.most_likely()}")

    if output:
        write_atomic(output, json.dumps(shown, sort_keys=True, indent=2) + "\n")
        console.print(f"[green]✓[/green] Outcomes saved to {output}")
