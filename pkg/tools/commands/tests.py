"""Test suite generation."""

from __future__ import annotations

import click
from rich.table import Table

from qbist.circuit import check_oracle
from qbist.testgen import build_suite
from tools.core.console import console
from tools.core.io import input_errors, load_circuit, load_function, write_atomic


@click.command(name="gen-tests")
@click.argument("circuit_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("output", type=click.Path(dir_okay=False))
@click.option(
    "--suite",
    type=click.Choice(["standard", "alternative"]),
    default="standard",
    show_default=True,
)
@click.option(
    "--function",
    "function_file",
    type=click.Path(exists=True, dir_okay=False),
    help="Truth table of the oracle (default: evaluated from the circuit)",
)
def gen_tests(circuit_file: str, output: str, suite: str, function_file: str | None):
    """Generate the test plans of an oracle.

    CIRCUIT_FILE: Oracle circuit text
    OUTPUT: Path to write the test suite JSON
    """
    with input_errors():
        oracle = load_circuit(circuit_file)
        check_oracle(oracle)
        f = load_function(function_file) if function_file else None
        generated = build_suite(oracle, f, suite)  # type: ignore[arg-type]
    write_atomic(output, generated.to_json())

    table = Table(title=f"{suite.capitalize()} suite, k={generated.k}")
    table.add_column("Test", style="cyan", no_wrap=True)
    table.add_column("Init")
    table.add_column("Measurement")
    table.add_column("Expected", style="magenta")
    for plan in generated.plans:
        measurement = plan.measurement.kind
        if plan.measurement.pair is not None:
            measurement += " q{} q{}".format(*plan.measurement.pair)
        table.add_row(plan.name, plan.init, measurement, plan.expected)
    console.print(table)
    console.print(
        f"[green]✓[/green] {len(generated.plans)} plans saved to {output}"
    )
