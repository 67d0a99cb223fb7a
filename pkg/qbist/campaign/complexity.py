from collections.abc import Sequence
from math import ceil

from qbist.boolfn import BooleanFunction
from qbist.circuit import Circuit, GateCensus, gate_census, oracle_function
from qbist.testgen import TestPlan, gen_standard_suite, synthesize_qbist32

from .models import ComplexityReport, FormulaCheck


def added_census(plan: TestPlan) -> GateCensus:
    """Gates a test adds around the oracle."""
    return gate_census(plan.prep) + gate_census(plan.post)


def _combined(census: dict[str, GateCensus], names: Sequence[str]) -> GateCensus:
    total = GateCensus()
    for name in names:
        total = total + census[name]
    return total


def classical_bound(k: int, n_e: int | None) -> str:
    """Classical test-count lower bound ``k + 4 + 2 n_e``."""
    if n_e is None:
        return f"{k + 4} + 2*n_e"
    return str(k + 4 + 2 * n_e)


def complexity_report(
    oracle: Circuit,
    f: BooleanFunction | None = None,
    n_e: int | None = None,
    plans: Sequence[TestPlan] | None = None,
) -> ComplexityReport:
    """Measured stage censuses next to the closed-form gate and experiment counts.

    The T5/T6 Hadamard count is checked twice: ``4k`` as stated for the
    register and ``4(k+1)`` as drawn with the target included. Any
    disagreement shows up in :attr:`ComplexityReport.mismatches`.
    """
    k = oracle.k
    f = oracle_function(oracle) if f is None else f
    plans = gen_standard_suite(oracle, f) if plans is None else plans
    census = {plan.name: added_census(plan) for plan in plans}
    scopes = [
        ("T1", ("T1",), "2(k-1)CN+2H", 2 * (k - 1), 2),
        ("T1∪T2", ("T1", "T2"), "4(k-1)CN+4H", 4 * (k - 1), 4),
        ("T5∪T6", ("T5", "T6"), "4kH", 0, 4 * k),
        ("T5∪T6 drawn", ("T5", "T6"), "4(k+1)H", 0, 4 * (k + 1)),
        (
            "T1∪T2∪T5∪T6",
            ("T1", "T2", "T5", "T6"),
            "4(k+1)H+4(k-1)CN",
            4 * (k - 1),
            4 * (k + 1),
        ),
    ]
    checks = tuple(
        FormulaCheck(
            scope=scope,
            formula=formula,
            expected_cn=cn,
            expected_h=h,
            measured=_combined(census, names),
        )
        for scope, names, formula, cn, h in scopes
        if all(name in census for name in names)
    )
    return ComplexityReport(
        k=k,
        census=census,
        checks=checks,
        qbist32=gate_census(synthesize_qbist32(f)),
        experiments={"standard": 6, "alternative": 5 + 4 * ceil(k / 2)},
        classical_bound=classical_bound(k, n_e),
        n_e=n_e,
    )
