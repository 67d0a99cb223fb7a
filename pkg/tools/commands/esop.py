"""Exact ESOP minimization and BIST residue selection."""

from __future__ import annotations

import json

import click

from qbist.boolfn import bist_residue, esop_min_cubes
from tools.core.console import console
from tools.core.io import input_errors, load_function, write_atomic


@click.command()
@click.argument("function_file", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--output", "-o", type=click.Path(dir_okay=False), help="Save results as JSON"
)
def esop(function_file: str, output: str | None):
    """Minimum ESOP of a function and its cheapest affine split.

    FUNCTION_FILE: Truth table, k <= 4
    """
    with input_errors():
        f = load_function(function_file)
        cost, witness = esop_min_cubes(f)
        residue = bist_residue(f)

    console.print(f"[bold]ESOP cost:[/bold] {cost}")
    console.print(f"  witness: {witness}")
    console.print(f"[bold]Affine part:[/bold] {residue.affine}")
    console.print(f"[bold]BIST residue:[/bold] {residue.esop} ({residue.cost} cubes)")

    if output:
        document = {
            "k": f.k,
            "esop_cost": cost,
            "witness": [str(cube) for cube in witness.cubes],
            "affine": residue.affine.model_dump(mode="json"),
            "bist_cubes": [str(cube) for cube in residue.esop.cubes],
            "bist_cost": residue.cost,
        }
        write_atomic(output, json.dumps(document, sort_keys=True, indent=2) + "\n")
        console.print(f"[green]✓[/green] Results saved to {output}")
