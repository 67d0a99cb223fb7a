from .complexity import added_census, classical_bound, complexity_report
from .coverage import (
    ALL_COLUMN,
    ALT_COLUMN,
    CampaignRunner,
    plan_columns,
    required_cells,
    requirement_rollup,
    run_campaign,
    union_name,
)
from .detection import detection_probability
from .faults import FAULT_MODELS, enumerate_single_faults, qbist_faults
from .models import (
    CampaignConfig,
    ComplexityReport,
    CoverageMatrix,
    DetectionRecord,
    FormulaCheck,
    GateTrace,
    Grade,
    MultiFaultConfig,
    MultiFaultReport,
    PhaseEvent,
    Requirement,
)
from .multifault import cancels, multi_fault_experiment
from .report import build_report, dumps_report
from .traces import trace_activations

__all__ = [
    "ALL_COLUMN",
    "ALT_COLUMN",
    "FAULT_MODELS",
    "CampaignConfig",
    "CampaignRunner",
    "ComplexityReport",
    "CoverageMatrix",
    "DetectionRecord",
    "FormulaCheck",
    "GateTrace",
    "Grade",
    "MultiFaultConfig",
    "MultiFaultReport",
    "PhaseEvent",
    "Requirement",
    "added_census",
    "build_report",
    "cancels",
    "classical_bound",
    "complexity_report",
    "detection_probability",
    "dumps_report",
    "enumerate_single_faults",
    "multi_fault_experiment",
    "plan_columns",
    "qbist_faults",
    "required_cells",
    "requirement_rollup",
    "run_campaign",
    "trace_activations",
    "union_name",
]
