"""File loading, atomic writes and the exit-code contract."""

from __future__ import annotations

import os
import tempfile
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import click

from qbist.boolfn import BooleanFunction, parse_truth_table
from qbist.circuit import Circuit, parse_circuit
from qbist.exceptions import QbistError
from tools.core.console import console

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_COVERAGE = 3


def read_text(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")


def load_function(path: str | Path) -> BooleanFunction:
    return parse_truth_table(read_text(path))


def load_circuit(path: str | Path) -> Circuit:
    return parse_circuit(read_text(path))


def write_atomic(path: str | Path, text: str) -> None:
    """Write ``text`` through a temporary file in the target directory."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


@contextmanager
def input_errors() -> Iterator[None]:
    """Report input problems and exit with code 2.

    Covers domain errors, pydantic validation errors (a ValueError), bad values
    and unreadable files.
    """
    try:
        yield
    except (QbistError, ValueError, OSError, KeyError) as exc:
        label = type(exc).__name__
        console.print(f"[bold red]✗ {label}:[/bold red] {exc}", highlight=False)
        raise click.exceptions.Exit(EXIT_INPUT) from exc
