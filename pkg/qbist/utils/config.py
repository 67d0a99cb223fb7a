from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class SimulationConfig(BaseModel):
    """Numerical settings shared by every module."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    tolerance: float = Field(
        default=1e-9,
        gt=0.0,
        lt=1.0,
        description="Absolute tolerance for amplitude and probability comparisons",
    )
    max_width: int = Field(
        default=24,
        ge=1,
        le=30,
        description="Largest statevector width the simulator accepts",
    )


_active = SimulationConfig()


def get_config() -> SimulationConfig:
    """Return the active simulation settings."""
    return _active


def configure(**changes: Any) -> SimulationConfig:
    """Replace the active settings with validated changes applied."""
    global _active
    _active = SimulationConfig(**{**_active.model_dump(), **changes})
    return _active


@contextmanager
def override(**changes: Any) -> Iterator[SimulationConfig]:
    """Temporarily apply settings changes within a ``with`` block."""
    global _active
    previous = _active
    try:
        yield configure(**changes)
    finally:
        _active = previous


def resolve_tolerance(tol: float | None) -> float:
    return get_config().tolerance if tol is None else tol
