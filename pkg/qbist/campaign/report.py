import json
from typing import Any

from .models import ComplexityReport, CoverageMatrix, MultiFaultReport, Requirement


def build_report(
    matrix: CoverageMatrix,
    complexity: ComplexityReport,
    required: dict[Requirement, tuple[str, ...]],
    suite: str,
    oracle_fingerprint: str,
    multi_fault: MultiFaultReport | None = None,
) -> dict[str, Any]:
    """Assemble the campaign report document.

    Sections are ``census``, ``experiments``, ``matrix``, ``records`` and
    ``summary``, plus ``multi_fault`` when that experiment ran.
    """
    missing = matrix.missing(required)
    report: dict[str, Any] = {
        "census": {
            "tests": {
                name: census.model_dump(mode="json")
                for name, census in complexity.census.items()
            },
            "qbist32": complexity.qbist32.model_dump(mode="json"),
            "checks": [
                {
                    "scope": check.scope,
                    "formula": check.formula,
                    "expected": {"cn": check.expected_cn, "h": check.expected_h},
                    "measured": {"cn": check.measured.cn, "h": check.measured.h},
                    "matches": check.matches,
                }
                for check in complexity.checks
            ],
            "mismatches": complexity.mismatches,
        },
        "experiments": {
            **complexity.experiments,
            "classical_bound": complexity.classical_bound,
        },
        "matrix": matrix.as_table(),
        "records": [
            {
                "fault": str(record.fault),
                "test": record.test,
                "probability": round(record.probability, 12),
                "deterministic": record.deterministic,
                "in_qbist": record.in_qbist,
            }
            for record in matrix.records
        ],
        "summary": {
            "suite": suite,
            "k": complexity.k,
            "oracle_fingerprint": oracle_fingerprint,
            "columns": {
                name: list(members) for name, members in matrix.columns.items()
            },
            "required": {
                str(requirement.value): list(columns)
                for requirement, columns in sorted(required.items())
            },
            "missing": [
                {"requirement": requirement.value, "column": column}
                for requirement, column in missing
            ],
            "passed": not missing,
        },
    }
    if multi_fault is not None:
        report["multi_fault"] = {
            **multi_fault.model_dump(mode="json"),
            "effective_trials": multi_fault.effective_trials,
            "fraction": multi_fault.fraction,
            "note": "experiment supporting, not proving, fault accumulation",
        }
    return report


def dumps_report(report: dict[str, Any]) -> str:
    """Stable JSON text for golden-file diffs."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
