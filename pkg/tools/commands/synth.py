"""Oracle synthesis from truth tables."""

from __future__ import annotations

import click

from qbist.boolfn import is_affine, pprm_expand
from qbist.circuit import build_oracle, format_circuit
from tools.core.console import console
from tools.core.io import input_errors, load_function, write_atomic


@click.command()
@click.argument("function_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("output", type=click.Path(dir_okay=False))
def synth(function_file: str, output: str):
    """Synthesize the PPRM k-CN oracle of a truth table.

    FUNCTION_FILE: Truth table (k= line, then tt= hex or minterms=)
    OUTPUT: Path to write the circuit text
    """
    with input_errors():
        f = load_function(function_file)
    expansion = pprm_expand(f)
    circuit = build_oracle(expansion)
    write_atomic(output, format_circuit(circuit))

    console.print(f"[bold]PPRM:[/bold] f = {expansion}")
    affine = is_affine(f)
    if affine is None:
        console.print("[yellow]not affine[/yellow]")
    else:
        console.print(f"[green]affine[/green]: f = {affine}")
    console.print(
        f"[green]✓[/green] {len(circuit)}-gate oracle on {circuit.width} qubits "
        f"saved to {output}"
    )
