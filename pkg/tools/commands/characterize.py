"""Characteristic-operation checks of single k-CN gates."""

from __future__ import annotations

import click
from rich.table import Table

from qbist.circuit import parse_gate
from qbist.sim import FaultSpec
from qbist.testgen import characterize_gate
from tools.core.console import console
from tools.core.io import EXIT_COVERAGE, input_errors


@click.command()
@click.argument("gate")
@click.option("--reference", help="Intended gate (default: GATE itself)")
@click.option(
    "--fault",
    "faults",
    multiple=True,
    help="Fault on the local gate circuit, e.g. pauli:z:w0:q1",
)
def characterize(gate: str, reference: str | None, faults: tuple[str, ...]):
    """Run the twelve characteristic operations on one gate.

    GATE: Gate text, e.g. "MCX t=q2 c=q0+,q1+"

    Exits with code 3 when any case fails.
    """
    with input_errors():
        candidate = parse_gate(gate)
        intended = parse_gate(reference) if reference else None
        specs = [FaultSpec.parse(text) for text in faults]
        result = characterize_gate(candidate, intended, specs)

    table = Table(title=f"Characterization of {result.gate}")
    table.add_column("Case", style="cyan", no_wrap=True)
    table.add_column("Description")
    table.add_column("Expected")
    table.add_column("Observed")
    table.add_column("Result", justify="center")
    for case in result.cases:
        mark = "[green]pass[/green]" if case.passed else "[red]fail[/red]"
        table.add_row(
            case.name, case.description, case.expected, case.observed, mark
        )
    console.print(table)

    failures = result.failures()
    if failures:
        console.print(f"[bold red]✗ {len(failures)}/12 cases failed[/bold red]")
        raise click.exceptions.Exit(EXIT_COVERAGE)
    console.print("[green]✓[/green] 12/12 cases passed")
