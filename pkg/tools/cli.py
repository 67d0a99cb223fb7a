#!/usr/bin/env python3
"""Main CLI entry point for qbist development tools."""

import logging

import click

from qbist.log import logger
from qbist.utils.config import override
from tools import __version__
from tools.commands.campaign import campaign
from tools.commands.characterize import characterize
from tools.commands.esop import esop
from tools.commands.report import report
from tools.commands.simulate import simulate
from tools.commands.synth import synth
from tools.commands.tests import gen_tests
from tools.core.config import resolve_command_config
from tools.core.io import input_errors


@click.group()
@click.version_option(version=__version__, prog_name="qbist-tools")
@click.option(
    "--tolerance",
    type=float,
    default=None,
    help="Numerical tolerance (default: QBIST_TOLERANCE or 1e-9)",
)
@click.option("--verbose", "-v", is_flag=True, help="Debug logging")
@click.pass_context
def cli(ctx: click.Context, tolerance: float | None, verbose: bool):
    """Quantum oracle test generation and fault campaign tools.

    Synthesize k-CN phase oracles from truth tables, generate QBIST test
    suites, simulate them with injected faults and grade requirement
    coverage.
    """
    with input_errors():
        config = resolve_command_config(
            ctx.invoked_subcommand or "synth", tolerance=tolerance, verbose=verbose
        )
    if config.verbose:
        logger.setLevel(logging.DEBUG)
    if config.tolerance is not None:
        ctx.with_resource(override(tolerance=config.tolerance))
    ctx.obj = config


# Register commands
cli.add_command(synth)
cli.add_command(gen_tests)
cli.add_command(simulate)
cli.add_command(characterize)
cli.add_command(campaign)
cli.add_command(esop)
cli.add_command(report)


if __name__ == "__main__":
    cli()
