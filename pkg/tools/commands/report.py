"""Rendering of saved campaign reports."""

from __future__ import annotations

import json

import click
from rich.table import Table

from qbist.campaign import Grade, Requirement
from tools.core.console import console
from tools.core.io import EXIT_COVERAGE, input_errors, read_text

_STYLE = {Grade.FULL: "green", Grade.PARTIAL: "yellow", Grade.NONE: "red"}


def _display_summary(summary: dict):
    table = Table(show_header=False, box=None)
    table.add_column("Property", style="bold")
    table.add_column("Value", style="cyan")
    table.add_row("Suite", summary["suite"])
    table.add_row("k", str(summary["k"]))
    table.add_row("Oracle", summary["oracle_fingerprint"])
    table.add_row("Columns", str(len(summary["columns"])))
    table.add_row("Passed", "yes" if summary["passed"] else "no")
    console.print(table)


def _display_matrix(matrix: dict[str, dict[str, str]], required: dict):
    table = Table(title="Requirement coverage")
    table.add_column("Req", style="bold", justify="right")
    table.add_column("Question")
    columns = list(next(iter(matrix.values()), {}))
    for column in columns:
        table.add_column(column, justify="center")
    for key, row in matrix.items():
        requirement = Requirement(int(key))
        cells = []
        for column in columns:
            style = _STYLE[Grade(row[column])]
            text = f"[{style}]{row[column]}[/{style}]"
            if column in required.get(key, ()):
                text = f"[bold]{text}*[/bold]"
            cells.append(text)
        table.add_row(key, requirement.question, *cells)
    console.print(table)


def _display_census(census: dict, experiments: dict):
    table = Table(title="Added gate census")
    table.add_column("Scope", style="cyan")
    table.add_column("Formula")
    table.add_column("Expected", justify="right")
    table.add_column("Measured", justify="right")
    table.add_column("Match", justify="center")
    for check in census["checks"]:
        expected, measured = check["expected"], check["measured"]
        table.add_row(
            check["scope"],
            check["formula"],
            f"{expected['cn']} CN + {expected['h']} H",
            f"{measured['cn']} CN + {measured['h']} H",
            "[green]yes[/green]" if check["matches"] else "[yellow]no[/yellow]",
        )
    console.print(table)
    qbist32 = census["qbist32"]
    console.print(
        f"QBIST32 stage: {qbist32['cn'] + sum(qbist32['mcx'].values())} k-CN, "
        f"{qbist32['x']} X; experiments: "
        f"standard {experiments['standard']}, alternative "
        f"{experiments['alternative']}, classical {experiments['classical_bound']}"
    )


@click.command()
@click.argument("report_file", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--check",
    is_flag=True,
    help="Exit with code 3 unless every required cell is full",
)
def report(report_file: str, check: bool):
    """Render a campaign report.

    REPORT_FILE: JSON report written by the campaign command
    """
    with input_errors():
        document = json.loads(read_text(report_file))
        summary = document["summary"]

    _display_summary(summary)
    _display_matrix(document["matrix"], summary["required"])
    _display_census(document["census"], document["experiments"])
    if "multi_fault" in document:
        multi = document["multi_fault"]
        console.print(
            f"{multi['n_faults']}-fault trials: {multi['detected']}/"
            f"{multi['effective_trials']} detected ({multi['fraction']:.3f}), "
            f"{multi['cancelled']} cancelled"
        )
    for entry in summary["missing"]:
        console.print(
            f"[bold red]✗ requirement {entry['requirement']} not full on "
            f"{entry['column']}[/bold red]"
        )
    if check and not summary["passed"]:
        raise click.exceptions.Exit(EXIT_COVERAGE)
