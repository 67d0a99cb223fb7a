from .boolfn import BooleanFunction, parse_truth_table, pprm_expand
from .campaign import CampaignConfig, CoverageMatrix, run_campaign
from .circuit import Circuit, build_oracle, parse_circuit
from .exceptions import QbistError
from .testgen import TestPlan, TestSuite, build_suite

__version__ = "0.1.0"

__all__ = [
    "BooleanFunction",
    "CampaignConfig",
    "Circuit",
    "CoverageMatrix",
    "QbistError",
    "TestPlan",
    "TestSuite",
    "build_oracle",
    "build_suite",
    "parse_circuit",
    "parse_truth_table",
    "pprm_expand",
    "run_campaign",
]
