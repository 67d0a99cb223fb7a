"""Command configuration resolution from CLI args and environment variables."""

from __future__ import annotations

import os
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

Subcommand = Literal[
    "synth", "gen-tests", "simulate", "characterize", "campaign", "esop", "report"
]

# Env vars checked after the CLI arg, before the default.
_FIELD_ENV: dict[str, tuple[str, float | int | None]] = {
    "tolerance": ("QBIST_TOLERANCE", None),
    "seed": ("QBIST_SEED", 0),
}


class CommandConfig(BaseModel):
    """Validated settings of one CLI invocation."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    subcommand: Subcommand
    inputs: tuple[str, ...] = Field(default=(), description="Input file paths")
    output: str | None = Field(default=None, description="Output file path")
    k: int | None = Field(default=None, ge=1)
    suite: Literal["standard", "alternative"] = "standard"
    models: tuple[Literal["pauli", "init", "measure"], ...] = (
        "pauli",
        "init",
        "measure",
    )
    probability: float = Field(default=1.0, gt=0.0, le=1.0)
    n_e: int | None = Field(default=None, ge=0)
    seed: int = 0
    tolerance: float | None = Field(
        default=None, gt=0.0, lt=1.0, description="Overrides the 1e-9 default"
    )
    verbose: bool = False


def _resolve_field(
    cli_value: float | int | None, variable: str, default: float | int | None
) -> str | float | int | None:
    """Resolve a single field: CLI arg > env var > default."""
    if cli_value is not None:
        return cli_value
    value = os.environ.get(variable)
    if value:
        return value
    return default


def resolve_command_config(
    subcommand: str,
    tolerance: float | None = None,
    seed: int | None = None,
    defaults: dict[str, float | int] | None = None,
    **fields: object,
) -> CommandConfig:
    """Build a CommandConfig, filling tolerance and seed from the environment.

    Priority order for each of ``tolerance`` and ``seed``: CLI arg >
    ``QBIST_TOLERANCE`` / ``QBIST_SEED`` > ``defaults`` (e.g. a config file) >
    built-in default. Environment strings are coerced and validated by the
    model.

    Raises:
        pydantic.ValidationError: If any value is out of range or unknown.
    """
    cli_values = {"tolerance": tolerance, "seed": seed}
    resolved = {
        field: _resolve_field(
            cli_values[field], variable, (defaults or {}).get(field, default)
        )
        for field, (variable, default) in _FIELD_ENV.items()
    }
    return CommandConfig.model_validate(
        {"subcommand": subcommand, **resolved, **fields}
    )
