"""Fault campaigns and coverage reports."""

from __future__ import annotations

from typing import Any

import click
from rich.table import Table

from qbist.campaign import (
    CampaignConfig,
    CampaignRunner,
    CoverageMatrix,
    Grade,
    Requirement,
    build_report,
    complexity_report,
    dumps_report,
    multi_fault_experiment,
    required_cells,
)
from qbist.circuit import check_oracle
from qbist.exceptions import CampaignError
from qbist.sim import FaultSpec, validate_location
from qbist.testgen import TestSuite, build_suite
from qbist.utils import ConfigReader
from tools.core.config import resolve_command_config
from tools.core.console import console
from tools.core.io import (
    EXIT_COVERAGE,
    input_errors,
    load_circuit,
    read_text,
    write_atomic,
)

_STYLE = {Grade.FULL: "green", Grade.PARTIAL: "yellow", Grade.NONE: "red"}


def _split_models(
    ctx: click.Context, param: click.Parameter, value: str | None
) -> tuple[str, ...] | None:
    if value is None:
        return None
    return tuple(part.strip() for part in value.split(",") if part.strip())


def merge_config(base: CampaignConfig, **flags: Any) -> CampaignConfig:
    """Apply the flags that were given on top of a file or default config."""
    changes = {name: value for name, value in flags.items() if value is not None}
    return CampaignConfig.model_validate({**base.model_dump(), **changes})


def render_matrix(
    matrix: CoverageMatrix, required: dict[Requirement, tuple[str, ...]]
):
    table = Table(title="Requirement coverage")
    table.add_column("Req", style="bold", justify="right")
    for column in matrix.columns:
        table.add_column(column, justify="center")
    for requirement in sorted(matrix.cells):
        cells = []
        for column in matrix.columns:
            grade = matrix.grade(requirement, column)
            text = f"[{_STYLE[grade]}]{grade.value}[/{_STYLE[grade]}]"
            if column in required.get(requirement, ()):
                text = f"[bold]{text}*[/bold]"
            cells.append(text)
        table.add_row(str(requirement.value), *cells)
    console.print(table)
    console.print("[dim]* required cell[/dim]")


@click.command()
@click.argument("circuit_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("output", type=click.Path(dir_okay=False))
@click.option(
    "--config",
    "config_file",
    type=click.Path(exists=True, dir_okay=False),
    help="Campaign settings (YAML or JSON)",
)
@click.option(
    "--tests",
    "tests_file",
    type=click.Path(exists=True, dir_okay=False),
    help="Test suite JSON from gen-tests (default: generate)",
)
@click.option("--suite", type=click.Choice(["standard", "alternative"]))
@click.option(
    "--models",
    callback=_split_models,
    help="Comma-separated fault models: pauli,init,measure",
)
@click.option("--p", "probability", type=float, help="Pauli placement probability")
@click.option(
    "--sweep", multiple=True, type=float, help="Extra placement probabilities"
)
@click.option("--bias", type=float, help="Init and measurement fault bias")
@click.option(
    "--include-qbist",
    "include_qbist_faults",
    is_flag=True,
    help="Also inject faults into the QBIST stages",
)
@click.option("--ne", "n_e", type=int, help="n_e of the classical bound")
@click.option("--seed", type=int, help="Random seed (default: QBIST_SEED or 0)")
@click.option("--workers", "max_workers", type=int, help="Parallel evaluations")
@click.option("--multi-fault", "n_faults", type=int, help="Faults per random trial")
@click.option("--trials", type=int, default=100, show_default=True)
@click.option(
    "--fault",
    "faults",
    multiple=True,
    help="Evaluate only these oracle faults instead of enumerating",
)
def campaign(
    circuit_file: str,
    output: str,
    config_file: str | None,
    tests_file: str | None,
    suite: str | None,
    models: tuple[str, ...] | None,
    probability: float | None,
    sweep: tuple[float, ...],
    bias: float | None,
    include_qbist_faults: bool,
    n_e: int | None,
    seed: int | None,
    max_workers: int | None,
    n_faults: int | None,
    trials: int,
    faults: tuple[str, ...],
):
    """Grade requirement coverage of a suite over single faults.

    CIRCUIT_FILE: Oracle circuit text
    OUTPUT: Path to write the JSON report

    Exits with code 3 when a required coverage cell is not full.
    """
    with input_errors():
        oracle = load_circuit(circuit_file)
        check_oracle(oracle)
        base = (
            ConfigReader().read_model(config_file, CampaignConfig)
            if config_file
            else CampaignConfig()
        )
        command = resolve_command_config(
            "campaign",
            seed=seed,
            defaults={"seed": base.seed},
            inputs=tuple(filter(None, (circuit_file, tests_file, config_file))),
            output=output,
        )
        config = merge_config(
            base,
            suite=suite,
            models=models,
            probability=probability,
            sweep=sweep or None,
            bias=bias,
            include_qbist_faults=include_qbist_faults or None,
            n_e=n_e,
            seed=command.seed,
            max_workers=max_workers,
            multi_fault={"n_faults": n_faults, "trials": trials} if n_faults else None,
        )
        if tests_file:
            tests = TestSuite.from_json(read_text(tests_file))
            if tests.oracle_fingerprint != oracle.fingerprint():
                raise CampaignError(
                    f"{tests_file} was generated for oracle "
                    f"{tests.oracle_fingerprint}, not {oracle.fingerprint()}"
                )
            config = merge_config(config, suite=tests.suite)
        else:
            tests = build_suite(oracle, suite=config.suite)
        specs = [FaultSpec.parse(text) for text in faults] if faults else None
        for spec in specs or ():
            validate_location(oracle, spec.location)
        runner = CampaignRunner(oracle, tests.plans, config)

    with console.status("[bold green]Running fault campaign..."):
        matrix = runner.run(specs)
        complexity = complexity_report(oracle, n_e=config.n_e, plans=tests.plans)
        multi = None
        if config.multi_fault is not None:
            multi = multi_fault_experiment(
                oracle,
                tests.plans,
                n_faults=config.multi_fault.n_faults,
                trials=config.multi_fault.trials,
                seed=config.seed,
                probability=config.probability,
            )
    required = required_cells(config.suite)
    report = build_report(
        matrix, complexity, required, config.suite, oracle.fingerprint(), multi
    )
    write_atomic(output, dumps_report(report))

    render_matrix(matrix, required)
    for mismatch in complexity.mismatches:
        console.print(f"[yellow]census mismatch[/yellow] {mismatch}")
    if multi is not None:
        console.print(
            f"{multi.n_faults}-fault trials: {multi.detected}/"
            f"{multi.effective_trials} detected, {multi.cancelled} cancelled"
        )
    console.print(f"[green]✓[/green] Report saved to {output}")

    missing = matrix.missing(required)
    if missing:
        for requirement, column in missing:
            console.print(
                f"[bold red]✗ requirement {requirement.value} not full on "
                f"{column}[/bold red]"
            )
        raise click.exceptions.Exit(EXIT_COVERAGE)
