from .analysis import enumerate_error_locations, gate_census
from .models import (
    Circuit,
    Control,
    ErrorLocation,
    Gate,
    GateCensus,
    GateKind,
    SiteKind,
    Stage,
)
from .synthesis import build_oracle, check_oracle, compose, oracle_function
from .textio import format_circuit, format_gate, parse_circuit, parse_gate

__all__ = [
    "Circuit",
    "Control",
    "ErrorLocation",
    "Gate",
    "GateCensus",
    "GateKind",
    "SiteKind",
    "Stage",
    "build_oracle",
    "check_oracle",
    "compose",
    "enumerate_error_locations",
    "format_circuit",
    "format_gate",
    "gate_census",
    "oracle_function",
    "parse_circuit",
    "parse_gate",
]
