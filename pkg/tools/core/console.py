"""Shared rich console for the qbist tools."""

from rich.console import Console

console = Console()
