from .characterize import characterize_gate
from .models import (
    ORACLE_LABEL,
    CaseResult,
    CharacterizationReport,
    Measurement,
    TestPlan,
    TestSuite,
)
from .stages import gen_ghz_stage, hadamard_layer, qbist32_gates, synthesize_qbist32
from .suites import (
    build_suite,
    gen_alternative_suite,
    gen_standard_suite,
    gen_t1_t2,
    gen_t3_t4,
    gen_t5_t6,
    pair_positions,
    run_plan,
)

__all__ = [
    "ORACLE_LABEL",
    "CaseResult",
    "CharacterizationReport",
    "Measurement",
    "TestPlan",
    "TestSuite",
    "build_suite",
    "characterize_gate",
    "gen_alternative_suite",
    "gen_ghz_stage",
    "gen_standard_suite",
    "gen_t1_t2",
    "gen_t3_t4",
    "gen_t5_t6",
    "hadamard_layer",
    "pair_positions",
    "qbist32_gates",
    "run_plan",
    "synthesize_qbist32",
]
